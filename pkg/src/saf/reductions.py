"""3-CNF to framework construction and a tiny satisfiability oracle.

The construction turns a 3-CNF formula into a framework in which a
designated argument ``psi`` is always an initial set; the formula is
satisfiable exactly when some initial set contains the formula argument
``phi``, which in turn challenges ``psi``.  Satisfiability therefore shows
up as the class of ``{psi}``: challenged iff satisfiable, unchallenged iff
not.  Used as a test-fixture generator linking SAT status to initial-set
classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import ContractError, Framework

PHI = "phi"
PHI_SHADOW = "phi~"
PSI = "psi"


@dataclass(frozen=True)
class Cnf3:
    """A CNF formula whose clauses each hold exactly three distinct literals.

    A literal is an (atom index, polarity) pair; polarity True is the
    positive literal.
    """

    atoms: tuple[str, ...]
    clauses: tuple[tuple[tuple[int, bool], ...], ...]

    def __post_init__(self) -> None:
        seen = set()
        for name in self.atoms:
            if not name or name in seen:
                raise ContractError(f"atom names must be unique and non-empty, got {name!r}")
            seen.add(name)
        for clause in self.clauses:
            if len(clause) != 3 or len(set(clause)) != 3:
                raise ContractError(f"each clause needs exactly three distinct literals, got {clause!r}")
            for atom, polarity in clause:
                if not 0 <= atom < len(self.atoms):
                    raise ContractError(f"atom index {atom} out of range")
                if not isinstance(polarity, bool):
                    raise ContractError("literal polarity must be a bool")


def positive_label(atom: str) -> str:
    return atom


def negative_label(atom: str) -> str:
    return f"¬{atom}"


def clause_label(i: int) -> str:
    return f"C{i + 1}"


def cnf3_to_af(phi: Cnf3) -> Framework:
    """Build the framework whose initial-set structure mirrors ``phi``.

    Arguments: phi, phi~, psi, one per clause, and the two literals of each
    atom.  Attacks: clauses attack phi; the literals of a clause attack it;
    complementary literals attack each other; phi~ attacks every literal;
    and phi, phi~, psi close the loop via (phi, phi~), (phi, psi),
    (psi, phi).
    """
    names = [PHI, PHI_SHADOW, PSI]
    names += [clause_label(i) for i in range(len(phi.clauses))]
    for atom in phi.atoms:
        names += [positive_label(atom), negative_label(atom)]

    def literal_label(atom: int, polarity: bool) -> str:
        name = phi.atoms[atom]
        return positive_label(name) if polarity else negative_label(name)

    attacks: list[tuple[str, str]] = []
    for i in range(len(phi.clauses)):
        attacks.append((clause_label(i), PHI))
    for i, clause in enumerate(phi.clauses):
        for atom, polarity in clause:
            attacks.append((literal_label(atom, polarity), clause_label(i)))
    for atom in phi.atoms:
        attacks.append((positive_label(atom), negative_label(atom)))
        attacks.append((negative_label(atom), positive_label(atom)))
    for atom in phi.atoms:
        attacks.append((PHI_SHADOW, positive_label(atom)))
        attacks.append((PHI_SHADOW, negative_label(atom)))
    attacks += [(PHI, PHI_SHADOW), (PHI, PSI), (PSI, PHI)]
    return Framework.of(names, attacks)


def sat_bruteforce(phi: Cnf3, bound: int = 20) -> bool:
    """Exhaustive satisfiability check; the empty clause list is satisfiable."""
    if len(phi.atoms) > bound:
        raise ContractError(f"formula has {len(phi.atoms)} atoms, exceeding the bound of {bound}")
    for assignment in product((False, True), repeat=len(phi.atoms)):
        if all(
            any(assignment[atom] == polarity for atom, polarity in clause)
            for clause in phi.clauses
        ):
            return True
    return False


def parse_dimacs(text: str) -> Cnf3:
    """Parse DIMACS CNF with exactly three literals per clause.

    Expects a ``p cnf <atoms> <clauses>`` header and clause lines of three
    non-zero integers terminated by 0; ``c`` lines are comments.  Atoms are
    named x1..xn.
    """
    declared_atoms = declared_clauses = None
    clauses: list[tuple[tuple[int, bool], ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if declared_atoms is not None:
                raise ContractError(f"line {lineno}: repeated problem header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ContractError(f"line {lineno}: malformed header {line!r}")
            declared_atoms, declared_clauses = int(parts[2]), int(parts[3])
            continue
        if declared_atoms is None:
            raise ContractError(f"line {lineno}: clause before the problem header")
        try:
            numbers = [int(tok) for tok in line.split()]
        except ValueError:
            raise ContractError(f"line {lineno}: malformed clause {line!r}") from None
        if len(numbers) != 4 or numbers[-1] != 0 or 0 in numbers[:3]:
            raise ContractError(
                f"line {lineno}: clauses need three non-zero literals terminated by 0"
            )
        clause = []
        for lit in numbers[:3]:
            atom = abs(lit) - 1
            if atom >= declared_atoms:
                raise ContractError(f"line {lineno}: literal {lit} exceeds declared atom count")
            clause.append((atom, lit > 0))
        clauses.append(tuple(clause))
    if declared_atoms is None:
        raise ContractError("missing problem header")
    if declared_clauses is not None and declared_clauses != len(clauses):
        raise ContractError(
            f"header declares {declared_clauses} clauses but {len(clauses)} were given"
        )
    atoms = tuple(f"x{i + 1}" for i in range(declared_atoms))
    return Cnf3(atoms, tuple(clauses))
