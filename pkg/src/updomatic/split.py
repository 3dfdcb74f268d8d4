"""D(G) of split graphs: the clique number, or one more when every clique
vertex has a neighbour in the independent side."""

from __future__ import annotations

from .graph import Graph, GraphClassError, SplitCertificate, split_certificate
from .oracle import SolveResult
from .partition import VertexPartition, is_transitive


def upper_domatic_split(g: Graph, cert: SplitCertificate | None = None) -> SolveResult:
    """D(G) = Tr(G) for a split graph, with a transitive witness.

    The certificate's clique must be maximum: no vertex of S may see all of K.
    """
    if cert is None:
        cert = split_certificate(g)
        if cert is None:
            raise GraphClassError("graph is not split")
    if not cert.is_valid(g):
        raise ValueError("invalid split certificate")
    if any(cert.K <= g.neighbors(s) for s in cert.S):
        raise ValueError("split certificate clique is not maximum")
    K = sorted(cert.K)
    lonely = [k for k in K if not g.neighbors(k) & cert.S]
    if lonely:
        keep = lonely[0]
        first = sorted(cert.S | {keep})
        blocks = [first] + [[k] for k in K if k != keep]
        value = cert.omega
    else:
        blocks = [sorted(cert.S)] + [[k] for k in K]
        value = cert.omega + 1
    pi = VertexPartition(blocks)
    if pi.k != value or not is_transitive(g, pi):
        raise AssertionError(f"split witness failed verification on {g!r}")
    return SolveResult(value, pi, "split")
