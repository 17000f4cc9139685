"""Shared frozen reference values used across the test suite.

Every constant here was produced by an independent reference
implementation (plain square-and-multiply, schoolbook polynomial
division, sympy cross-checks) and then frozen.  Tests compare the
package against these values exactly.
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# Notable inputs
# ---------------------------------------------------------------------------

# Squarefree composite with six prime factors: 139*353*433*461*691*19141.
N22 = 129545102216217601

# Composite with eight prime factors: 17*31*41*43*89*97*167*331.
# The smallest odd prime sharing a factor is hit on probe 6 of the
# non-residue search.
HC1 = 443372888629441

# 38-digit composite whose non-residue search runs 10 probes before
# finding q = 31.
HC2 = 97723892848682923994567734100095132801

# 1287836182261 * 2575672364521: strong pseudoprime to all prime bases
# 2..37.  Also the documented bound below which that base set is a
# deterministic primality test.
NHC = 3317044064679887385961981

# 29-digit composite, congruent to 3 mod 8, so the q = 2 branch applies
# deterministically.
ARN = 12530759607784496010584573923

# 61 * 234157301941, congruent to 1 mod 24; the non-residue search needs
# 17 probes before the Jacobi symbol vanishes at q = 61.
N17 = 14283595418401

# 151 * 751 * 28351: strong pseudoprime to bases 2, 3, 5, 7.
CAR = 3215031751

# 1129 * 5641, congruent to 1 mod 24; passes the first battery
# condition at m = 5 but fails the second.
NC = 6368689

# ---------------------------------------------------------------------------
# Canonical polynomial table (ascending coefficients)
# ---------------------------------------------------------------------------

PHI5 = [1, 1, 1, 1, 1]
UPS5 = [-1, 1, 1]
PSI5 = [5, 0, 5, 0, 1]
PSI7 = [7, 0, 14, 0, 7, 0, 1]
PSI13 = [13, 0, 91, 0, 182, 0, 156, 0, 65, 0, 13, 0, 1]

# m -> (cyclotomic, half-trace, squared-root-form), all ascending.
TABLE1 = {
    3: ([1, 1, 1], [1, 1], [3, 0, 1]),
    5: (PHI5, UPS5, PSI5),
    7: ([1] * 7, [-1, -2, 1, 1], PSI7),
    9: ([1, 0, 0, 1, 0, 0, 1], [1, -3, 0, 1], [3, 0, 9, 0, 6, 0, 1]),
    11: ([1] * 11, [1, 3, -3, -4, 1, 1],
         [11, 0, 55, 0, 77, 0, 44, 0, 11, 0, 1]),
    13: ([1] * 13, [-1, 3, 6, -4, -5, 1, 1], PSI13),
    16: ([1, 0, 0, 0, 0, 0, 0, 0, 1], [2, 0, -4, 0, 1], [2, 0, 4, 0, 1]),
}

UPS23 = [-1, -6, 15, 35, -35, -56, 28, 36, -9, -10, 1, 1]
PSI23 = [23, 0, 506, 0, 3289, 0, 9867, 0, 16445, 0, 16744, 0, 10948,
         0, 4692, 0, 1311, 0, 230, 0, 23, 0, 1]

# ---------------------------------------------------------------------------
# Frozen binomial-congruence remainders (ascending coefficients)
# ---------------------------------------------------------------------------

# (1+x)^589 - 1 - x^589 mod <PSI5, 589>
MBEC_589_PSI5 = [248, 13, 53, 571]

# (1+x)^NC - 1 - x^NC mod <PSI5, NC>
MBEC_NC_PSI5 = [6150380, 1348224, 2597822, 3749099]

# (1+x)^1729 - 1 - x^1729 mod <UPS5 / PSI5, 1729>
MBEC_1729_UPS5 = [399]
MBEC_1729_PSI5 = [111, 696, 992, 1512]

# (1+x)^N22 - 1 - x^N22 mod <PSI7, N22>
MBEC_N22_PSI7 = [
    119437295377094747, 106786570291725190, 33810842987621038,
    57509069882335769, 95250414045526348, 7749118361454337,
]

# (1+x)^HC1 - 1 - x^HC1 mod <PSI13, HC1>
MBEC_HC1_PSI13 = [
    37713192327089, 138141834928239, 96773751187738, 260655781077493,
    6061685505666, 203557127787304, 238837540418259, 404383242454180,
    413820067085710, 284129884605406, 202985071765805, 178460653426619,
]

# (1+x)^HC2 - 1 - x^HC2 mod <UPS23, HC2>
MBEC_HC2_UPS23 = [
    56712658712124248085142237606803068366,
    36751682583914212891594817914850440257,
    78872181994260418161340929912069486270,
    680845739513346306122381393827060601,
    35009325250098923332261415985511009686,
    8231827026209149177650677407006756901,
    65344320625457121559166633371587299314,
    23641562585171246995870299767381873515,
    59714044128801097207026303463144922987,
    45100817291879874014582728146134999166,
    87192998862053969089548887848939786557,
]

# (1+x)^HC2 - 1 - x^HC2 mod <PSI23, HC2>
MBEC_HC2_PSI23 = [
    26349438634724092046157710083990549904,
    66936809587641527577040507932524540850,
    24131246045493434063369854473644108805,
    19481294491269186994789687483761094508,
    25795736697598403218007901027480812833,
    42591741371242177104792094138243448222,
    70423468766855291529785102206212280687,
    11488069374527646280446153220487243841,
    65635463947918246932300885737595959964,
    75047602680818204230693469622207848178,
    20660157860104990715898830306821136010,
    83465985952917306602744662972723260710,
    62644331329159802707341411851437096049,
    4674135998523632307374580975774730606,
    94727802493617851679725029794423593934,
    71243614808987972663329679123637239650,
    88231143772932816360702233510444309847,
    69314069588483684173510291307670365743,
    80192164369290958582089350825611079213,
    65721744295446801541906551801883694291,
    20120370024637678764044739524786899975,
    2707262309588934057936129756477369747,
]

# ---------------------------------------------------------------------------
# Frozen defect pairs and Euler defects
# ---------------------------------------------------------------------------

BCC_2_NHC = (20605378916168, 15454034187128)
BCC_33_NHC = (1243891524260431073510348, 1243891524255279728781308)
BCC_34_NHC = (2010329736175092266204728, 2010329736169940921475688)
BCC_35_NHC = (1756082151899957855245547, 1756082151894806510516507)
BCC_7_NHC = (1105681354900164254959381, 1105681354895012910230341)
BCC_2_ARN = (10949201963878277507380641428, 5087992615606218130791693452)
BCC_CARM2_CAR = (569101174, 484221431)

# (q, defect pair, euler defect) for n = 589 at the first four
# non-residues drawn by a seeded random search.
QUAD_589 = [
    (506, (561, 329), 420),
    (78, (259, 376), 65),
    (202, (352, 500), 344),
    (382, (468, 205), 141),
]

# ---------------------------------------------------------------------------
# Carmichael numbers below 1e5
# ---------------------------------------------------------------------------

CARMICHAELS_1E5 = [
    561, 1105, 1729, 2465, 2821, 6601, 8911, 10585, 15841, 29341,
    41041, 46657, 52633, 62745, 63973, 75361,
]
