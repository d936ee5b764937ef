# -*- coding: utf-8 -*-

"""Small edge lists and seed files shared by the tests."""


path_abc = """\
# the path a - b - c, both directions listed
a b
b a
b c
c b
"""

weighted_directed = """\
# weights, a loop and a repeated edge
a b 2.5
b c -1.0
c c 0.5
a b 4
"""

square_abcd = """\
a b
b a
b c
c b
c d
d c
d a
a d
a c
c a
"""

square_greek = """\
alpha beta
beta alpha
beta gamma
gamma beta
gamma delta
delta gamma
delta alpha
alpha delta
alpha gamma
gamma alpha
"""

square_seeds = """\
# psi(u) = v
a alpha
b beta
"""

triangle = """\
x y
y x
y z
z y
z x
x z
"""

bad_token_count = """\
a b
a b c d
"""

bad_weight = "a b heavy\n"
