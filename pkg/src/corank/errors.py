class InputError(ValueError):
    """Raised for malformed or inconsistent user input."""


class DisconnectedGraphError(InputError):
    """The kNN graph has more than one connected component."""

    def __init__(self, n_components, k, k_connect):
        self.n_components = n_components
        self.k = k
        self.k_connect = k_connect
        super().__init__(
            f"kNN graph with k={k} has {n_components} connected components; "
            f"smallest k giving a connected graph is {k_connect}"
        )
