"""Family kind enumeration for graph descriptors."""

from enum import Enum


class FamilyKind(str, Enum):
    """Descriptor prefixes accepted wherever a graph is expected."""

    COMPLETE = "K"
    CYCLE = "C"
    CIRCULAR_COMPLETE = "Kc"
    KNESER = "KG"
    SCHRIJVER = "SG"
    HELICAL = "H"
    SCHRIJVER_HELICAL = "SGk"
    STABLE_HELICAL = "SH"
    PETERSEN = "P"
    COXETER = "Cox"
    HYPERCUBE = "Q"
    COMPLETE_BIPARTITE = "Kmn"


# Number of integer parameters each kind takes
FAMILY_ARITY = {
    FamilyKind.COMPLETE: 1,
    FamilyKind.CYCLE: 1,
    FamilyKind.CIRCULAR_COMPLETE: 2,
    FamilyKind.KNESER: 2,
    FamilyKind.SCHRIJVER: 2,
    FamilyKind.HELICAL: 3,
    FamilyKind.SCHRIJVER_HELICAL: 3,
    FamilyKind.STABLE_HELICAL: 3,
    FamilyKind.PETERSEN: 0,
    FamilyKind.COXETER: 0,
    FamilyKind.HYPERCUBE: 1,
    FamilyKind.COMPLETE_BIPARTITE: 2,
}
