import itertools

from posetforge import find_isomorphism
from posetforge.corpus import corpus_census, small_posets


def test_census_matches_known_counts():
    # unlabeled posets on 0..6 points
    assert corpus_census(6) == {0: 1, 1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318}


def test_representatives_pairwise_nonisomorphic():
    four = [P for P in small_posets(4) if P.n == 4]
    for P, Q in itertools.combinations(four, 2):
        assert find_isomorphism(P, Q) is None


def test_every_labeled_poset_on_three_points_is_covered():
    # exhaustive cross-check at n=3: every strict order matrix appears
    import numpy as np

    from posetforge.poset import Poset, transitive_closure

    reps = [P for P in small_posets(3) if P.n == 3]
    seen = set()
    for bits in range(1 << 6):
        adj = np.zeros((3, 3), dtype=bool)
        pos = 0
        for i in range(3):
            for j in range(3):
                if i != j:
                    adj[i, j] = (bits >> pos) & 1
                    pos += 1
        closed = transitive_closure(adj)
        if closed.diagonal().any() or (closed & closed.T).any():
            continue
        P = Poset(["a", "b", "c"], closed, _validated=True)
        matches = [i for i, R in enumerate(reps) if find_isomorphism(P, R) is not None]
        assert len(matches) == 1
        seen.add(matches[0])
    assert seen == set(range(len(reps)))
