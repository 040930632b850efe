"""
Equations as text
=================

The same parser backs the ``cyclering`` command.
"""

from cyclering.cli import dispatch, main
from cyclering.parser import ParseError, parse, print_canonical

eq = parse("(C(1,2) + C(1,3)) * X = C(10,6)")
print(print_canonical(eq), "->", eq.classification)
print(dispatch(eq, "decide")["witness"])

for text in ["C(2,2)*X = C(4,4)", "C(1,3)*X = C(3,6)+C(5,12)", "X^2 = C(1,1)"]:
    print(text, "->", parse(text).classification)

try:
    parse("C(1,4)*X = C(12,")
except ParseError as err:
    print("error:", err)

# exit code 0 means solvable
code = main(["decide", "C(1,4)*X=C(12,12)", "--json"])
print("exit code", code)
