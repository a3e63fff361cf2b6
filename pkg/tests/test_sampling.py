from hwweights.hwmodule import antidominant, simply_regular
from hwweights.rootsys import root_system
from hwweights.sampling import POOL, sample_weights
from hwweights.verify import descriptors_for


def test_reproducible_and_stratified():
    R = root_system("A2")
    a = sample_weights(R, 12, 3)
    assert a == sample_weights(R, 12, 3)
    for stratum, lam in a:
        if stratum == "dominant":
            assert lam.is_dominant_integral()
        elif stratum == "antidominant":
            assert antidominant(lam)
        elif stratum == "simply_regular":
            assert simply_regular(lam)
        else:
            assert 0 in lam.coords
        assert all(c in POOL or stratum == "dominant" for c in lam.coords)


def test_descriptors_cover_all_parabolics():
    R = root_system("A3")
    ds = descriptors_for(R.weight([1, 2, "-1/2"]))
    assert len(ds) == 2 + 3
    assert {d.label() for d in ds} >= {"simple", "verma", "pverma:1,2"}
