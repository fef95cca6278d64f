import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from coremine import KCoreMiner, PartiteCoreMiner
from coremine.exceptions import ThresholdArityMismatch
from coremine.graph import build_graph


def test_get_set_params():
    est = KCoreMiner(k=3)
    assert est.get_params() == {"k": 3}
    assert est.set_params(k=5).k == 5
    assert clone(est).get_params() == {"k": 5}
    assert PartiteCoreMiner(thresholds=(2, 1)).get_params() == {"thresholds": (2, 1)}


def test_fit_attributes(k4_pendant):
    est = KCoreMiner(k=3).fit(k4_pendant)
    assert est.cores_.cores == (("a", "b", "c", "d"),)
    assert est.labels_.tolist() == [0, 0, 0, 0, -1]
    assert est.get_support().tolist() == [True] * 4 + [False]


def test_fit_predict_labels():
    g = build_graph([("a", "b"), ("b", "c"), ("a", "c"),
                     ("x", "y"), ("y", "z"), ("x", "z"), ("c", "q")])
    assert KCoreMiner(k=2).fit_predict(g).tolist() == [0, 0, 0, 1, 1, 1, -1]


def test_fit_transform(k4_pendant):
    sub = KCoreMiner(k=3).fit_transform(k4_pendant)
    assert sub.labels == ("a", "b", "c", "d") and sub.edge_count == 6


def test_not_fitted(triangle):
    with pytest.raises(NotFittedError):
        KCoreMiner().transform(triangle)


def test_transform_size_check(triangle, k4):
    est = KCoreMiner(k=2).fit(triangle)
    with pytest.raises(ValueError):
        est.transform(k4)


def test_bad_params(triangle, k23):
    with pytest.raises(ValueError):
        KCoreMiner(k=-1).fit(triangle)
    with pytest.raises(ThresholdArityMismatch):
        PartiteCoreMiner(thresholds=(1,)).fit(k23)
    with pytest.raises(TypeError):
        PartiteCoreMiner().fit(triangle)


def test_partite(k23):
    est = PartiteCoreMiner(thresholds=(3, 2)).fit(k23)
    assert np.all(est.labels_ == 0)
    sub = est.transform(k23)
    assert sub.partition_sizes == [2, 3]
    assert PartiteCoreMiner(thresholds=(3, 3)).fit(k23).cores_.cores == ()
