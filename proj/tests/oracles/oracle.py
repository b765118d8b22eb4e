"""Independent reference implementation used to freeze expected values in the C++ tests.

Plain Python with fractions.Fraction; shares no code with the library. Run:
    python3 tests/oracles/oracle.py
"""
from fractions import Fraction as F
from itertools import permutations, combinations, product
import math
import random


def position(ballot, c):
    return ballot.index(c) if c in ballot else None


def x_value(ballot, a, b):
    pa, pb = position(ballot, a), position(ballot, b)
    if pa is None and pb is None:
        return F(1, 2)
    if pb is None or (pa is not None and pa < pb):
        return F(1)
    return F(0)


def n_of(profile):
    return sum(w for _, w in profile)


def alignment(profile, out, a, b):
    if out.index(a) > out.index(b):
        a, b = b, a
    return sum(w * x_value(bal, a, b) for bal, w in profile) / n_of(profile)


def misalignment(profile, out):
    return min(alignment(profile, out, a, b) for a, b in combinations(out, 2))


def sigma_u_of(M):
    return F(1) if M >= F(1, 2) else M / (1 - M)


def sigma_u(profile, out):
    return sigma_u_of(misalignment(profile, out))


def condense(profile, c):
    return [(tuple(x for x in bal if x != c), w) for bal, w in profile]


def scoring(vector_for_m):
    def rule(profile, roster):
        m = len(roster)
        sv = vector_for_m(m)
        score = {c: F(0) for c in roster}
        for bal, w in profile:
            for i, c in enumerate(bal):
                if i < len(sv):
                    score[c] += w * sv[i]
        return sorted(roster, key=lambda c: (-score[c], roster.index(c)))
    return rule


borda = scoring(lambda m: [F(m - i) for i in range(m)])
plurality = scoring(lambda m: [F(1)])
two_app = scoring(lambda m: [F(1)] * 2)
three_app = scoring(lambda m: [F(1)] * 3)


def stv(k):
    def rule(profile, roster):
        n = n_of(profile)
        quota = n / (k + 1)
        piles = [[list(bal), w] for bal, w in profile]
        continuing = list(roster)
        elected, eliminated = [], []

        def top(bal):
            for c in bal:
                if c in continuing:
                    return c
            return None

        def support():
            s = {c: F(0) for c in continuing}
            for bal, w in piles:
                t = top(bal)
                if t is not None:
                    s[t] += w
            return s

        while len(elected) < k and continuing:
            s = support()
            if len(continuing) <= k - len(elected):
                for c in sorted(continuing, key=lambda c: (-s[c], roster.index(c))):
                    elected.append(c)
                continuing = []
                break
            over = [c for c in continuing if s[c] > quota]
            if over:
                c = sorted(over, key=lambda c: (-s[c], roster.index(c)))[0]
                factor = (s[c] - quota) / s[c]
                for p in piles:
                    if top(p[0]) == c:
                        p[1] *= factor
                continuing.remove(c)
                elected.append(c)
            else:
                c = sorted(continuing, key=lambda c: (s[c], -roster.index(c)))[0]
                continuing.remove(c)
                eliminated.append(c)
        s = support() if continuing else {}
        rest = sorted(continuing, key=lambda c: (-s[c], roster.index(c)))
        return elected + rest + list(reversed(eliminated))
    return rule


def swap(r1, r2):
    return sum(1 for a, b in combinations(r1, 2) if (r2.index(a) < r2.index(b)) != (r1.index(a) < r1.index(b)))


def sigma_iia(rule, profile, roster):
    m = len(roster)
    if m <= 2:
        return F(1)
    full = rule(profile, roster)
    total = 0
    for c in roster:
        sub = [x for x in roster if x != c]
        total += swap(rule(condense(profile, c), sub), [x for x in full if x != c])
    return 1 - F(total, m * math.comb(m - 1, 2))


def main():
    R = ['A', 'B', 'C']
    p = [(('A', 'B', 'C'), 3), (('B', 'C', 'A'), 2), (('C', 'B', 'A'), 2)]
    print('plurality ranking', plurality(p, R), 'sigma_iia', sigma_iia(plurality, p, R))

    cyc = [(('A', 'B', 'C'), 1), (('B', 'C', 'A'), 1), (('C', 'A', 'B'), 1)]
    print('cycle alignment(A,B) under ABC', alignment(cyc, R, 'A', 'B'))
    print('cycle M over all outputs', {''.join(o): misalignment(cyc, list(o)) for o in permutations(R)})
    print('cycle sigma_u over outputs', set(sigma_u(cyc, list(o)) for o in permutations(R)))

    g = [(('A', 'B'), 4), (('C',), 3), (('B',), 2)]
    print('stv k=2 golden', stv(2)(g, R))
    print('stv k=1 majority', stv(1)([(('A',), 6), (('B',), 3), (('C',), 1)], R))

    # McGarvey gadget: complete ballots, n = 9, margins A>B 5, B>C 3, C>A 1
    perms = list(permutations(R))
    gadget = None
    for counts in product(range(10), repeat=6):
        if sum(counts) != 9:
            continue
        prof = [(perm, c) for perm, c in zip(perms, counts) if c]
        def margin(a, b):
            return sum(w * (x_value(bal, a, b) - x_value(bal, b, a)) for bal, w in prof)
        if margin('A', 'B') == 5 and margin('B', 'C') == 3 and margin('C', 'A') == 1:
            gadget = prof
            break
    print('gadget', gadget)
    print('gadget best sigma_u', max((sigma_u(gadget, list(o)), o) for o in permutations(R)))
    print('gadget sigma_u per output', {''.join(o): sigma_u(gadget, list(o)) for o in permutations(R)})

    # sigma_iia witnesses (< 1) for each standard rule on small profiles
    rng = random.Random(7)
    R4 = ['A', 'B', 'C', 'D']
    rules = {'borda': borda, '3-approval': three_app, '2-approval': two_app,
             'plurality': plurality, 'stv:k=2': stv(2)}
    for name, rule in rules.items():
        for _ in range(2000):
            prof = []
            for _ in range(rng.randint(3, 7)):
                perm = list(R4)
                rng.shuffle(perm)
                prof.append((tuple(perm[:rng.randint(1, 4)]), rng.randint(1, 4)))
            v = sigma_iia(rule, prof, R4)
            if v < 1:
                print('witness', name, prof, 'sigma_iia', v, 'ranking', rule(prof, R4))
                break

    # Bradley-Terry enumeration for s = (0.5, 0.3, 0.2)
    s = {'A': 0.5, 'B': 0.3, 'C': 0.2}
    def bt(r):
        w = 1.0
        for a, b in combinations(r, 2):
            w *= s[a] / (s[a] + s[b])
        return w
    z = sum(bt(r) for r in perms)
    print('bt normalized', {''.join(r): repr(bt(r) / z) for r in perms})

    # Borda / reversal crafted rule on a unanimous profile
    u = [(('A', 'B', 'C', 'D'), 5)]
    print('borda unanimous', borda(u, R4))


if __name__ == '__main__':
    main()
