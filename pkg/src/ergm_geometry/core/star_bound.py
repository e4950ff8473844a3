from enum import Enum


class StarBound(str, Enum):
    """Upper limit of the k-star sum in the Gibbs exponent.

    SUBGRAPH_MAX_DEGREE sums k = 1..min(K, maxdeg(G_S)), so k-star terms above the
    spanning subgraph's maximum degree are dropped even though Σ deg^k is nonzero
    there. CAP always sums k = 1..K.
    """

    SUBGRAPH_MAX_DEGREE = "subgraph_max_degree"
    CAP = "cap"

    def __str__(self) -> str:
        return self.value
