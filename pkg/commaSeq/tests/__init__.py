# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

# published prefixes used by several test modules
COMMA_SEQUENCE_FROM_1 = [1, 12, 35, 94, 135, 186, 248, 331, 344]
LANDMINES_BASE10 = [18, 27, 36, 45, 54, 63, 72, 81, 918, 927, 936, 945, 954, 963, 972, 981]
BRANCH_POINTS_BASE10 = [14, 33, 52, 71, 118, 227, 336, 445, 554, 663, 772, 881, 1918, 2927, 3936]
TRANSFORM_OF_NATURALS = [1, 12, 23, 34, 45, 56, 67, 78, 89, 91, 1, 11, 21]
BASE3_INFINITE_PATH = [1, 5, 12, 13, 18, 20, 27, 28, 32, 39, 40, 44, 51, 52, 57, 59, 67, 72, 74, 81]
DEATH_COUNTS = [0, 1, 2, 4, 5, 7, 8, 11, 12, 14, 16, 18, 20, 23, 24, 26, 29, 31, 33, 36, 38, 40, 42]

# first 40 lines of the published b-file of A121805, transcribed verbatim
PUBLISHED_B121805 = """\
1 1
2 12
3 35
4 94
5 135
6 186
7 248
8 331
9 344
10 387
11 461
12 475
13 530
14 535
15 590
16 595
17 651
18 667
19 744
20 791
21 809
22 908
23 997
24 1068
25 1149
26 1240
27 1241
28 1252
29 1273
30 1304
31 1345
32 1396
33 1457
34 1528
35 1609
36 1700
37 1701
38 1712
39 1733
40 1764
"""

def bfileText(values, offset=1, header=True):
    """
    Creates the body of a b-file for the given values.

    :param values: list of integers
    :param offset: index of the first value
    :param header: whether or not to add comment lines
    :return: a string
    """
    lines = ["# test data", "#"] if header else []
    lines += [f"{i} {v}" for i, v in enumerate(values, start=offset)]
    return "\n".join(lines) + "\n\n"
