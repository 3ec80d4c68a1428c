# ============================================================================ #
#
#                             Copyright (c) 2023
#                               Sebastian Thiem
#
#                 Permission is hereby granted, free of charge,
#                to any person obtaining a copy of this software
#              and associated documentation files (the "Software"),
#                 to deal in the Software without restriction,
#                 including without limitation the rights to
#            use, copy, modify, merge, publish, distribute, sublicense,
#                     and/or sell copies of the Software,
#         and to permit persons to whom the Software is furnished to do so,
#                    subject to the following conditions:
#
#     The above copyright notice and this permission notice shall be included
#             in all copies or substantial portions of the Software.
#
#         THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
#               EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
#                      THE WARRANTIES OF MERCHANTABILITY,
#             FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
#             IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
#               LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
#              WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
#            ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
#                 OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
# ============================================================================ #
#
# Description:  Exceptions raised by the extension engine. Validation errors
#               reject bad input, consistency errors flag disagreement
#               between two routes that must agree.
#
# ============================================================================ #


class GentleExtError(Exception):
    """Base class for every error the engine raises on purpose."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def diagnostic(self) -> dict:
        """Machine readable form of the error, safe to dump as JSON.

        Returns:
            dict: The error class, message, and any extra details.
        """
        report = {"error": type(self).__name__, "message": self.message}
        for key, val in self.details.items():
            report[key] = val if isinstance(val, (int, str, bool, list, dict)) \
                or val is None else str(val)
        return report


class ValidationError(GentleExtError):
    """Input does not describe a valid triangulation, string or sequence."""

    def __init__(self, message: str, position: int | None = None, **details):
        super().__init__(message, position=position, **details)
        self.position = position


class ConsistencyError(GentleExtError):
    """Two independent computations disagree. Never expected on valid input."""
