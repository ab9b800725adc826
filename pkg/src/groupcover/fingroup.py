"""Small finite groups as explicit multiplication tables, plus the
structural computations every other module builds on: closures, conjugacy
classes, the full normal subgroup lattice, quotients, abelian invariants
and exact weight.

Elements are ids 0..order-1 with 0 the identity.  Groups built from
generators are numbered in BFS order from the identity, following the given
generator order, so constructions are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .abelian import AbelianInvariants, is_prime, prime_factors
from .config import DEFAULT_CAPS
from .errors import (
    ClosureExceedsCap,
    InvalidPermutation,
    NotAbelian,
    NotAGroup,
    NotNormal,
    NotPrime,
    OrderCapExceeded,
    SingularGenerator,
    TrivialGroup,
)


class FiniteGroup:
    """Finite group given by its full multiplication table.

    validate:
      "full"      identity/Latin/inverse checks plus associativity
                  (triple loop up to ``naive_limit``, generator-based
                  associativity test beyond; both are complete checks)
      "structure" identity/Latin/inverse checks only (for tables that are
                  associative by construction)
      "none"      trust the table entirely (fault-injection aid)
    """

    __slots__ = ("name", "order", "table", "inverse", "_cache")

    def __init__(self, name, table, validate="structure", naive_limit=256):
        self.name = str(name)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        if self.order == 0:
            raise NotAGroup("empty table")
        if validate != "none":
            _check_structure(self.table)
        if validate == "full":
            _check_associativity(self.table, naive_limit)
        self.inverse = _inverse_table(self.table)
        self._cache = {}

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def conjugate(self, g, x):
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def element_order(self, x):
        k, y = 1, x
        while y != 0:
            if k > self.order:
                raise NotAGroup(f"powers of element {x} never reach the identity")
            y = self.table[y][x]
            k += 1
        return k

    def element_orders(self):
        orders = self._cache.get("orders")
        if orders is None:
            orders = tuple(self.element_order(x) for x in range(self.order))
            self._cache["orders"] = orders
        return orders

    def is_abelian(self):
        flag = self._cache.get("abelian")
        if flag is None:
            t = self.table
            flag = all(
                t[a][b] == t[b][a]
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
            self._cache["abelian"] = flag
        return flag

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class ElementSet:
    """Subset of a group's elements, used for subgroups and covers."""

    group: FiniteGroup
    members: frozenset[int]

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    @property
    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    def to_hex(self) -> str:
        return hex(self.mask)

    def is_subgroup(self) -> bool:
        t = self.group.table
        mem = self.members
        if 0 not in mem:
            return False
        return all(t[a][b] in mem for a in mem for b in mem)

    def is_normal(self) -> bool:
        if not self.is_subgroup():
            return False
        g = self.group
        mem = self.members
        return all(g.conjugate(x, s) in mem for x in range(g.order) for s in mem)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


# ---------------------------------------------------------------------------
# table validation


def _check_structure(table):
    n = len(table)
    ids = set(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        if set(row) != ids:
            raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != ids:
            raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")
    for x in range(n):
        if table[0][x] != x or table[x][0] != x:
            raise NotAGroup(f"element 0 is not an identity against {x}")


def _check_associativity(table, naive_limit):
    n = len(table)
    if n <= naive_limit:
        for a in range(n):
            ta = table[a]
            for b in range(n):
                tab = table[ta[b]]
                tb = table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise NotAGroup(f"associativity fails on triple ({a},{b},{c})")
        return
    # generator-based test: associativity on all triples with a generator in
    # the middle implies associativity everywhere
    gens = _greedy_generators(table)
    for g in gens:
        tg = table[g]
        for x in range(n):
            txg = table[table[x][g]]
            tx = table[x]
            for y in range(n):
                if txg[y] != tx[tg[y]]:
                    raise NotAGroup(f"associativity fails on triple ({x},{g},{y})")


def _greedy_generators(table):
    n = len(table)
    gens = []
    known = {0}
    for x in range(n):
        if x in known:
            continue
        gens.append(x)
        known.add(x)
        frontier = list(known)
        while frontier:
            a = frontier.pop()
            for b in tuple(known):
                for y in (table[a][b], table[b][a]):
                    if y not in known:
                        known.add(y)
                        frontier.append(y)
        if len(known) == n:
            break
    return gens


def _inverse_table(table):
    n = len(table)
    inv = [None] * n
    for x in range(n):
        row = table[x]
        for y in range(n):
            if row[y] == 0:
                inv[x] = y
                break
        if inv[x] is None:
            raise NotAGroup(f"element {x} has no right inverse")
    return tuple(inv)


def validate_group(group, naive_limit=64):
    """Re-run the full group-axiom check on an existing instance."""
    _check_structure(group.table)
    _check_associativity(group.table, naive_limit)


# ---------------------------------------------------------------------------
# constructions


def build_from_permutations(degree, generators, cap=None, name=None):
    """Close a list of permutations of 0..degree-1 under composition."""
    cap = DEFAULT_CAPS.order if cap is None else cap
    if degree < 1:
        raise InvalidPermutation("degree must be positive")
    gens = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if sorted(g) != list(range(degree)):
            raise InvalidPermutation(f"{g} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    identity = tuple(range(degree))

    def compose(p, q):
        return tuple(p[i] for i in q)

    elems = _bfs_closure(identity, gens, compose, cap)
    table = _table_from_elements(elems, compose)
    return FiniteGroup(name or f"perm{degree}", table, validate="structure")


def build_from_cayley_table(table, name="table"):
    """Validated group from a raw multiplication table (O(n^3) check for
    n <= 256, generator-based complete check beyond)."""
    return FiniteGroup(name, table, validate="full")


def build_from_matrix_generators(p, d, generators, cap=None, name=None):
    """Close d x d matrices over F_p under multiplication mod p."""
    cap = DEFAULT_CAPS.order if cap is None else cap
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise SingularGenerator("dimension must be positive")
    gens = []
    for mat in generators:
        mat = tuple(tuple(int(x) % p for x in row) for row in mat)
        if len(mat) != d or any(len(row) != d for row in mat):
            raise SingularGenerator(f"matrix is not {d}x{d}")
        if _det_mod_p(mat, p) == 0:
            raise SingularGenerator(f"matrix {mat} is singular mod {p}")
        gens.append(mat)
    identity = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))

    def matmul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(d)) % p for j in range(d))
            for i in range(d)
        )

    elems = _bfs_closure(identity, gens, matmul, cap)
    table = _table_from_elements(elems, matmul)
    return FiniteGroup(name or f"mat({p},{d})", table, validate="structure")


def _bfs_closure(identity, gens, op, cap):
    elems = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = op(x, g)
            if y not in index:
                if len(elems) >= cap:
                    raise ClosureExceedsCap(f"closure exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    return elems


def _table_from_elements(elems, op):
    index = {e: i for i, e in enumerate(elems)}
    return [[index[op(a, b)] for b in elems] for a in elems]


def _det_mod_p(mat, p):
    m = [list(row) for row in mat]
    d = len(m)
    det = 1
    for k in range(d):
        piv = next((i for i in range(k, d) if m[i][k] % p != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det = det * m[k][k] % p
        inv = pow(m[k][k], -1, p)
        for i in range(k + 1, d):
            f = m[i][k] * inv % p
            m[i] = [(x - f * y) % p for x, y in zip(m[i], m[k])]
    return det % p


def direct_product(g, h, cap=None):
    """Componentwise product; id of (a, b) is a*|H| + b."""
    cap = DEFAULT_CAPS.order if cap is None else cap
    n = g.order * h.order
    if n > cap:
        raise ClosureExceedsCap(f"product order {n} exceeds cap {cap}")
    hn = h.order
    gt, ht = g.table, h.table
    table = [
        [gt[a1][a2] * hn + ht[b1][b2] for a2 in range(g.order) for b2 in range(hn)]
        for a1 in range(g.order)
        for b1 in range(hn)
    ]
    return FiniteGroup(f"{g.name}x{h.name}", table, validate="structure")


# ---------------------------------------------------------------------------
# structure


def subgroup_closure(group, seeds):
    """Smallest subgroup containing the seed elements."""
    members = _closure_members(group.table, seeds)
    return ElementSet(group, frozenset(members))


def _closure_members(table, seeds):
    seeds = [s for s in seeds]
    known = {0}
    known.update(seeds)
    frontier = list(known)
    while frontier:
        x = frontier.pop()
        row = table[x]
        for s in seeds:
            y = row[s]
            if y not in known:
                known.add(y)
                frontier.append(y)
    # seeds may not include inverses; in a finite group closing under right
    # multiplication by the seed set from the identity yields the subgroup,
    # provided we start from all of them
    return known


def normal_closure(group, seeds):
    """Smallest normal subgroup containing the seed elements."""
    conj = {group.conjugate(g, s) for s in seeds for g in range(group.order)}
    members = _closure_members(group.table, sorted(conj))
    return ElementSet(group, frozenset(members))


def conjugacy_classes(group):
    """Partition of element ids into conjugation orbits, each a sorted
    tuple, ordered by smallest member (identity class first)."""
    cached = group._cache.get("classes")
    if cached is not None:
        return cached
    n = group.order
    seen = [False] * n
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = {group.conjugate(g, x) for g in range(n)}
        for y in orbit:
            seen[y] = True
        classes.append(tuple(sorted(orbit)))
    result = tuple(classes)
    group._cache["classes"] = result
    return result


def _mask(members):
    m = 0
    for x in members:
        m |= 1 << x
    return m


def _normal_subgroup_sets(group, cap):
    if group.order > cap:
        raise OrderCapExceeded(
            f"|G| = {group.order} exceeds normal-subgroup cap {cap}"
        )
    cached = group._cache.get("normal_sets")
    if cached is not None:
        return cached
    table = group.table
    # every normal subgroup is the join of the normal closures of the
    # conjugacy classes it contains, and the join of two normal subgroups is
    # their product set; so close the class-closures under products
    base = []
    base_masks = []
    seen_base = set()
    for cls in conjugacy_classes(group):
        members = frozenset(_closure_members(table, cls))
        m = _mask(members)
        if m not in seen_base:
            seen_base.add(m)
            base.append(members)
            base_masks.append(m)
    found = {}
    stack = list(base)
    while stack:
        s = stack.pop()
        m = _mask(s)
        if m in found:
            continue
        found[m] = s
        for a, am in zip(base, base_masks):
            if am & ~m:
                stack.append(frozenset(table[x][y] for x in s for y in a))
    result = tuple(sorted(found.values(), key=lambda s: (len(s), _mask(s))))
    group._cache["normal_sets"] = result
    return result


def normal_subgroups(group, cap=None):
    """All normal subgroups, including {e} and G, sorted by (size, mask)."""
    cap = DEFAULT_CAPS.normal if cap is None else cap
    return [ElementSet(group, s) for s in _normal_subgroup_sets(group, cap)]


def maximal_normal_subgroups(group, cap=None):
    """Proper normal subgroups maximal under inclusion (the quotient by each
    is simple)."""
    cap = DEFAULT_CAPS.normal if cap is None else cap
    if group.order == 1:
        raise TrivialGroup("the trivial group has no proper normal subgroups")
    sets = _normal_subgroup_sets(group, cap)
    proper = [(s, _mask(s)) for s in sets if len(s) < group.order]
    maximal = []
    for s, m in proper:
        if not any(m != m2 and m & ~m2 == 0 for _, m2 in proper):
            maximal.append(s)
    return [ElementSet(group, s) for s in maximal]


def quotient(group, nset, name=None):
    """Coset group G/N; cosets numbered ascending by smallest member, so the
    identity coset is id 0."""
    members = nset.members if isinstance(nset, ElementSet) else frozenset(nset)
    table = group.table
    if 0 not in members or not ElementSet(group, frozenset(members)).is_normal():
        raise NotNormal(f"subset of size {len(members)} is not normal in {group.name}")
    coset_of = [None] * group.order
    reps = []
    for x in range(group.order):
        if coset_of[x] is not None:
            continue
        cid = len(reps)
        reps.append(x)
        for s in members:
            coset_of[table[x][s]] = cid
    qtable = [[coset_of[table[a][b]] for b in reps] for a in reps]
    qname = name or f"{group.name}/{hex(_mask(members))}"
    return FiniteGroup(qname, qtable, validate="structure")


def derived_subgroup(group):
    """Subgroup generated by all commutators x y x^-1 y^-1 (normal)."""
    cached = group._cache.get("derived")
    if cached is not None:
        return ElementSet(group, cached)
    t = group.table
    inv = group.inverse
    n = group.order
    comms = {t[t[t[x][y]][inv[x]]][inv[y]] for x in range(n) for y in range(n)}
    members = frozenset(_closure_members(t, sorted(comms)))
    group._cache["derived"] = members
    return ElementSet(group, members)


def abelianisation(group):
    """G / G' as a FiniteGroup."""
    return quotient(group, derived_subgroup(group), name=f"{group.name}^ab")


def abelian_invariants_finite(group):
    """Invariant factor decomposition of a finite abelian group, computed by
    primary decomposition per prime and merged into a divisor chain."""
    if not group.is_abelian():
        raise NotAbelian(f"{group.name} is not abelian")
    n = group.order
    if n == 1:
        return AbelianInvariants(0, ())
    orders = group.element_orders()
    per_prime = {p: _p_component_exponents(orders, p, n) for p in prime_factors(n)}
    depth = max(len(e) for e in per_prime.values())
    factors_desc = []
    for t in range(depth):
        d = 1
        for q, exps in per_prime.items():
            if t < len(exps):
                d *= q ** exps[t]
        factors_desc.append(d)
    return AbelianInvariants(0, tuple(reversed(factors_desc)))


def _p_component_exponents(orders, p, n):
    """Exponent partition (descending) of the p-primary component, read off
    the counts of elements of order dividing p^j."""
    target = _p_power_part(n, p)
    logs = []
    j = 1
    while True:
        pj = p**j
        if pj > n * p:
            raise NotAbelian("element order counts never fill the p-component")
        c = sum(1 for o in orders if pj % o == 0)
        e = 0
        while p**e < c:
            e += 1
        if p**e != c:
            raise NotAbelian("element order counts are not p-power sized")
        logs.append(e)
        if c == target:
            break
        j += 1
    deltas = [logs[0]] + [logs[i] - logs[i - 1] for i in range(1, len(logs))]
    exps = []
    for i in range(1, deltas[0] + 1):
        exps.append(sum(1 for d in deltas if d >= i))
    return exps  # descending


def _p_power_part(n, p):
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def weight_bruteforce(group, cap=None):
    """Exact weight: the least k with G the normal closure of k elements."""
    return weight_witness(group, cap)[0]


def weight_witness(group, cap=None):
    """(weight, witness tuple); the witness is the lexicographically first
    tuple of conjugacy-class representatives attaining the weight."""
    cap = DEFAULT_CAPS.weight if cap is None else cap
    if group.order > cap:
        raise OrderCapExceeded(f"|G| = {group.order} exceeds weight cap {cap}")
    if group.order == 1:
        return 0, ()
    table = group.table
    full = (1 << group.order) - 1
    reps = [cls[0] for cls in conjugacy_classes(group) if cls != (0,)]
    # normal closure of a tuple = join of the single-element closures, and
    # distinct representatives with equal closures are interchangeable, so
    # keep only the first representative per closure
    closure_sets = {}
    chosen = []
    single = {}
    for r in sorted(reps):
        members = normal_closure(group, (r,)).members
        m = _mask(members)
        if m not in closure_sets:
            closure_sets[m] = members
            chosen.append(r)
            single[r] = m
    join_cache = {}

    def join(m1, m2):
        if m2 & ~m1 == 0:
            return m1
        key = (m1, m2)
        got = join_cache.get(key)
        if got is None:
            s1, s2 = closure_sets[m1], closure_sets[m2]
            merged = frozenset(table[x][y] for x in s1 for y in s2)
            got = _mask(merged)
            closure_sets.setdefault(got, merged)
            join_cache[key] = got
        return got

    for k in range(1, len(chosen) + 1):
        for combo in combinations(chosen, k):
            m = single[combo[0]]
            redundant = False
            for r in combo[1:]:
                if single[r] & ~m == 0:
                    redundant = True
                    break
                m = join(m, single[r])
            if not redundant and m == full:
                return k, combo
    # unreachable for a genuine group: the join of all class closures is G
    raise NotAGroup("class closures do not join to the whole table")
