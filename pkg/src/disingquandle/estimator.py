"""scikit-learn compatible front end for coloring-count invariants.

``ColoringInvariant`` is fitted on a list of structures and transforms a batch
of links into an ``(n_links, n_structures)`` integer matrix. Each row is the
tuple invariant of that link, so the transformer composes with pipelines,
``FunctionTransformer`` and friends.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .algebra import AxiomError, OrientedDisingquandle, validate_oriented_disingquandle
from .catalog import CatalogEntry, LINK_NAMES, get_link
from .coloring import count_colorings, count_colorings_exhaustive
from .families import builtin
from .links import LinkDiagram, RelationSystem, parse_relation_dsl, relations_from_diagram

__all__ = ["ColoringInvariant", "check_structures", "check_systems"]


def check_structures(structures) -> list[OrientedDisingquandle]:
    """Resolve builtin names and validate every structure (raises AxiomError)."""
    if isinstance(structures, (str, OrientedDisingquandle)):
        structures = [structures]
    out = []
    for s in structures:
        d = builtin(s) if isinstance(s, str) else s
        if not isinstance(d, OrientedDisingquandle):
            raise TypeError(f"expected a structure or builtin name, got {type(s).__name__}")
        report = validate_oriented_disingquandle(d)
        if not report.passed:
            raise AxiomError(report)
        out.append(d)
    if not out:
        raise ValueError("at least one structure is required")
    return out


def check_systems(X) -> list[RelationSystem]:
    """Accept relation systems, diagrams, catalog entries, link names or DSL text."""
    if isinstance(X, (str, RelationSystem, LinkDiagram, CatalogEntry)):
        X = [X]
    out = []
    for item in X:
        if isinstance(item, RelationSystem):
            out.append(item)
        elif isinstance(item, CatalogEntry):
            out.append(item.system)
        elif isinstance(item, LinkDiagram):
            out.append(relations_from_diagram(item))
        elif isinstance(item, str):
            if item in LINK_NAMES or f"{item}^2" in LINK_NAMES:
                out.append(get_link(item).system)
            else:
                out.append(parse_relation_dsl(item))
        else:
            raise TypeError(f"cannot interpret {type(item).__name__} as a relation system")
    return out


class ColoringInvariant(TransformerMixin, BaseEstimator):
    """Map links to their coloring counts under a fixed list of structures.

    Parameters
    ----------
    structures : sequence of str or OrientedDisingquandle
        Builtin names (``"z10_canonical"``, ``"z30"``, ...) or structures.
    method : {"solver", "oracle"}
        Backtracking solver or exhaustive enumeration.
    threads : int
        Worker threads for the solver.
    """

    def __init__(self, structures=("z10_canonical", "z30"), method="solver", threads=1):
        self.structures = structures
        self.method = method
        self.threads = threads

    def fit(self, X=None, y=None):
        if self.method not in ("solver", "oracle"):
            raise ValueError(f"method must be 'solver' or 'oracle', got {self.method!r}")
        self.structures_ = check_structures(self.structures)
        self.n_features_out_ = len(self.structures_)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "structures_")
        systems = check_systems(X)
        out = np.zeros((len(systems), len(self.structures_)), dtype=np.int64)
        for i, s in enumerate(systems):
            for j, d in enumerate(self.structures_):
                if self.method == "oracle":
                    out[i, j] = count_colorings_exhaustive(s, d).count
                else:
                    out[i, j] = count_colorings(s, d, threads=self.threads).count
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "structures_")
        return np.array([d.name or f"structure{i}" for i, d in enumerate(self.structures_)], dtype=object)
