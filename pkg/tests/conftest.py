"""Shared fixtures: corpus groups are built once per session.

Group construction is cheap but not free (Schreier-Sims per group), and the
corpus is consulted by several modules, so the built groups are cached and
handed out read-only. PermutationGroup instances are safe to share within a
process as long as nobody calls _adopt on them; tests treat them as frozen.
"""

import pytest

from radlab import catalog


@pytest.fixture(scope="session")
def corpus():
    return {name: catalog.build_named(name) for name in catalog.CORPUS}


@pytest.fixture(scope="session")
def small_corpus(corpus):
    # the exhaustive cross-method sweeps only want the cheap groups
    return {n: g for n, g in corpus.items() if g.order <= 20_000}
