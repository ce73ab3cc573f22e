"""A short tour of the hopfcox command line."""

import sys

from hopfcox import cli

for argv in (
    ["eval", "d4*g1_2 o d2*g1_1 o d2"],
    ["eval", "--op", "coprod", "d4*g1_2"],
    ["eval", "G+1_1*G-1_1"],
    ["basis", "--ring", "D", "--n", "3", "--deg", "2"],
    ["restrict", "d2", "--site", "all"],
    ["sq", "--i", "1", "d2"],
    ["render", "d4*g1_2 o d2"],
    ["eval", "d1 o G+1_1"],
):
    print("$ hopfcox", " ".join(argv))
    code = cli.run(argv, sys.stdout, sys.stdout)
    print(f"(exit {code})\n")
