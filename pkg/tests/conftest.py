from fractions import Fraction
from math import sqrt

import pytest

from drgdist.scheme import parse_intersection_array
from drgdist.families import family_ia
from drgdist.cli.tables import corpus_text


PETERSEN = "{3,2;1,1}"
CUBE = "{3,2,1;1,2,3}"
HYPERCUBE_4 = "{4,3,2,1;1,2,3,4}"
ICOSAHEDRON = "{5,2,1;1,2,5}"
GOLAY_1 = "{22,21,20,3,2,1;1,2,3,20,21,22}"
GOLAY_2 = "{22,21,20,16,6,2,1;1,2,6,16,20,21,22}"
GOLAY_3 = "{23,22,21,20,3,2,1;1,2,3,20,21,22,23}"
HADAMARD_34 = "{68,67,34,1;1,34,67,68}"

# (array, c_2(G)^2, r = d bound)
COUNTEREXAMPLES = (
    (HADAMARD_34, 9 * (sqrt(68) - 1) / (sqrt(68) + 1), 8 * (sqrt(68) - 1) / sqrt(68)),
    (GOLAY_1, 35 / 3, 126 / 11),
    (GOLAY_2, 27 / 2, 147 / 11),
    (GOLAY_3, 63 / 4, 343 / 23),
)

# (name, array, v, printed c_2(G)^2, relative tolerance)
CORPUS = (
    ("antipodal-1", "{76,75,6,1;1,6,75,76}", 1104, 7.14773, 1e-5),
    ("antipodal-2", "{85,84,5,1;1,5,84,85}", 1600, 7.23867, 1e-5),
    ("antipodal-3", "{116,115,10,1;1,10,115,116}", 1568, 7.47073, 1e-5),
    ("antipodal-4", "{135,128,18,1;1,18,128,135}", 1232, Fraction(36, 5), 1e-9),
    ("antipodal-5", "{154,150,15,1;1,15,150,154}", 1850, Fraction(15, 2), 1e-9),
    ("antipodal-6", "{243,224,36,1;1,36,224,243}", 2000, Fraction(36, 5), 1e-9),
    ("antipodal-7", GOLAY_1, 2048, Fraction(35, 3), 1e-9),
    ("bipartite-1", "{26,25,24,2,1;1,2,24,25,26}", 704, Fraction(10), 1e-9),
    ("bipartite-2", "{33,32,27,6,1;1,6,27,32,33}", 420, Fraction(64, 7), 1e-9),
    ("bipartite-3", "{36,35,32,4,1;1,4,32,35,36}", 704, Fraction(112, 11), 1e-9),
    ("bipartite-4", "{37,36,35,2,1;1,2,35,36,37}", 1408, Fraction(120, 11), 1e-9),
    ("bipartite-5", "{45,44,36,9,1;1,9,36,44,45}", 532, Fraction(176, 19), 1e-9),
    ("bipartite-6", "{46,45,40,6,1;1,6,40,45,46}", 784, Fraction(72, 7), 1e-9),
    ("bipartite-7", "{49,48,45,4,1;1,4,45,48,49}", 1276, Fraction(320, 29), 1e-9),
    ("bipartite-8", "{55,54,50,5,1;1,5,50,54,55}", 1300, Fraction(144, 13), 1e-9),
    ("bipartite-9", "{57,56,45,12,1;1,12,45,56,57}", 648, Fraction(28, 3), 1e-9),
    ("bipartite-10", "{76,75,64,12,1;1,12,64,75,76}", 1104, Fraction(240, 23), 1e-9),
    ("bipartite-11", "{85,84,75,10,1;1,10,75,84,85}", 1600, Fraction(56, 5), 1e-9),
    ("bipartite-12", "{96,95,80,16,1;1,16,80,95,96}", 1334, Fraction(304, 29), 1e-9),
    ("bipartite-13", "{116,115,96,20,1;1,20,96,115,116}", 1568, Fraction(368, 35), 1e-9),
    ("bipartite-14", "{16,15,15,14,2,1,1;1,1,2,14,15,15,16}", 4114, Fraction(180, 11), 1e-9),
    ("bipartite-15", GOLAY_2, 2048, Fraction(27, 2), 1e-9),
    ("bipartite-16", GOLAY_3, 4096, Fraction(63, 4), 1e-9),
    ("bipartite-17", "{105,104,100,75,30,5,1;1,5,30,75,100,104,105}", 19140, Fraction(468, 29), 1e-9),
)


# (family, params, intersection array or None, c_2(G)^2)
INSTANCES = (
    ("hamming", (3, 2), "{3,2,1;1,2,3}", 3),
    ("hamming", (4, 3), "{8,6,4,2;1,2,3,4}", 4),
    ("johnson", (7, 3), "{12,6,2;1,4,9}", 3),
    ("halved-cube", (8,), "{28,15,6,1;1,6,15,28}", 4),
    ("doob", (3,), "{9,6,3;1,2,3}", 3),
    ("grassmann", (2, 6, 3), "{98,72,32;1,9,49}", Fraction(36, 7)),
    ("twisted-grassmann", (2, 7, 3), "{210,168,96;1,9,49}", Fraction(36, 7)),
    ("bilinear", (2, 3, 2), "{21,12;1,6}", Fraction(8, 3)),
    ("dual-polar", (3, 1, 2), "{14,12,8;1,3,7}", Fraction(36, 7)),
    ("dual-polar", (2, "1/2", 4), "{10,8;1,5}", Fraction(16, 5)),
    ("pseudo-dm", (3, 0, 2), "{7,6,4;1,3,7}", Fraction(36, 7)),
    ("alternating", (4, 2), "{35,16;1,20}", Fraction(16, 5)),
    ("quadratic", (5, 2), "{155,112;1,20}", Fraction(16, 5)),
    ("half-dual-polar", (4, 2), "{70,32;1,35}", Fraction(16, 5)),
    ("symplectic-1or2", (5, 2), "{310,224;1,35}", Fraction(16, 5)),
    ("gosset", (), "{27,10,1;1,10,27}", 3),
    ("e77", (2,), "{279006,269824,131072;1,527,139503}", Fraction(768, 91)),
    ("affine-e6", (2,), None, Fraction(768, 91)),
    ("unitary-dual-polar", (2, 2), None, Fraction(16, 5)),
    ("unitary-dual-polar", (3, 2), "{42,40,32;1,5,21}", Fraction(48, 7)),
    ("witt-m24", (), "{30,28,24;1,3,15}", Fraction(168, 25)),
    ("witt-m23", (), None, Fraction(84, 13)),
    ("ternary-golay", (), None, Fraction(33, 5)),
    ("triality", (2,), None, Fraction(32, 5)),
    ("hermitian", (2, 2), "{5,4;1,2}", Fraction(8, 3)),
    ("hermitian", (3, 2), "{21,20,16;1,2,12}", Fraction(20, 3)),
    ("hermitian", (2, 3), "{20,18;1,6}", Fraction(24, 7)),
    ("hadamard", (1,), "{2,1,1,1;1,1,1,2}", 2.343145751),
    ("hadamard", (2,), "{4,3,2,1;1,2,3,4}", 4),
    ("hadamard", (4,), None, 5.171572875),
    ("hadamard", (34,), "{68,67,34,1;1,34,67,68}", 7.053256679),
    ("taylor", (5, 2), "{5,2,1;1,2,5}", 2.48753882),
    ("taylor", (10, 4), None, 2.834297047),
    ("hexagon", (2, 2), "{6,4,4;1,1,3}", 4),
    ("hexagon", (3, 3), None, Fraction(81, 16)),
    ("octagon", (2, 4), "{10,8,8,8;1,1,1,5}", Fraction(512, 65)),
    ("octagon", (4, 2), "{12,8,8,8;1,1,1,3}", Fraction(256, 39)),
    ("odd", (2,), "{3,2;1,1}", 2),
    ("odd", (3,), "{4,3,3;1,1,2}", Fraction(27, 7)),
    ("odd", (4,), None, Fraction(96, 17)),
    ("odd", (5,), None, Fraction(250, 33)),
    ("odd", (6,), None, Fraction(180, 19)),
)

# Every shipped corpus array and every family instance
ARRAYS = (
    *(pytest.param(text, id=name) for name, text, *_ in CORPUS),
    *(pytest.param((name, params), id=f"{name}{params}") for name, params, *_ in INSTANCES),
)


def build(source):
    """
    An entry of ARRAYS as an IntersectionArray
    """
    return parse_intersection_array(source) if isinstance(source, str) else family_ia(*source)


@pytest.fixture
def petersen():
    return parse_intersection_array(PETERSEN, name="petersen")


@pytest.fixture
def cube():
    return parse_intersection_array(CUBE, name="cube")


@pytest.fixture
def corpus_lines():
    return corpus_text().splitlines()
