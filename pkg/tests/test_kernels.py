import os
import random
import subprocess
import sys

import pytest

from evo_mt import kernels
from evo_mt._kernels import Lcg
from oracles import levenshtein as slow_levenshtein

BACKENDS = [kernels.python_backend]
if kernels.compiled_backend is not None:
    BACKENDS.append(kernels.compiled_backend)


def test_lcg_first_draws():
    rng = Lcg(0)
    state = 1442695040888963407
    assert rng.next_u32() == state >> 32
    state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
    assert rng.next_u32() == state >> 32


def test_lcg_below_stays_in_range_and_covers_it():
    rng = Lcg(42)
    for bound in (1, 2, 3, 7, 100):
        seen = {rng.below(bound) for _ in range(2000)}
        assert seen == set(range(bound))
    with pytest.raises(ValueError):
        rng.below(0)


def test_lcg_seed_wraps_to_64_bits():
    assert Lcg(2**64 + 5).state == 5


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__)
def test_levenshtein_against_oracle(backend):
    rng = random.Random(3)
    for _ in range(300):
        a = [rng.randrange(4) for _ in range(rng.randint(0, 7))]
        b = [rng.randrange(4) for _ in range(rng.randint(0, 7))]
        assert backend.levenshtein(a, b) == slow_levenshtein(a, b)
    assert backend.levenshtein(["NN", "VB"], ["VB", "NN"]) == 2


@pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled extension not built")
def test_backends_agree_draw_for_draw():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(0, 9)
        seq = [rng.randrange(5) for _ in range(n)]
        target = rng.sample(seq, n) if rng.random() < 0.8 else [rng.randrange(6) for _ in range(n)]
        args = (seq, target, rng.randint(1, 40), rng.randint(1, 60), rng.getrandbits(64),
                rng.random() < 0.5, rng.random() < 0.8)
        py = kernels.python_backend.evolve_core(*args)
        c = kernels.compiled_backend.evolve_core(*args)
        assert (list(py[0]), py[1], [(f, tuple(o)) for f, o in py[2]]) == \
            (list(c[0]), c[1], [(f, tuple(o)) for f, o in c[2]])


def test_pure_python_can_be_forced():
    env = dict(os.environ, EVO_MT_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from evo_mt import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
