class BudgetExceeded(RuntimeError):
    def __init__(self, explored, budget=None):
        self.explored = explored
        self.budget = budget
        super().__init__(f"state budget exceeded after exploring {explored} states (budget {budget})")


class StateSpace:
    """
    Implicit reconfiguration graph of an instance.

    A colouring is packed into one integer key in mixed radix: digit v is the index of
    the colour of v within its (sorted) list. Python integers are unbounded, so the
    same key works however many vertices and colours there are.
    """

    def __init__(self, inst):
        self.inst = inst
        self.n = inst.n
        self.lists = inst.lists
        self.position = [{c: i for i, c in enumerate(l)} for l in self.lists]
        self.nbrs = [sorted(inst.graph.adjacency[v]) for v in range(self.n)]

        self.place = []
        place = 1
        for l in self.lists:
            self.place.append(place)
            place *= len(l)

        self.size_bound = place

    def encode(self, colouring):
        return sum(self.position[v][colouring[v]] * self.place[v] for v in range(self.n))

    def decode(self, key):
        colouring = []

        for v in range(self.n):
            key, digit = divmod(key, len(self.lists[v]))
            colouring.append(self.lists[v][digit])

        return colouring

    def blocked(self, colouring, v):
        """Colours of v ruled out by the current colours of its neighbours."""
        blocked = set()

        for w in self.nbrs[v]:
            c = self.inst.conflicting_colour(w, colouring[w], v)
            if c is not None:
                blocked.add(c)

        return blocked

    def neighbours(self, key, colouring=None):
        """Yields (next_key, v, new_colour, old_colour) for every single-vertex recolouring."""
        colouring = self.decode(key) if colouring is None else colouring

        for v in range(self.n):
            old = colouring[v]
            blocked = self.blocked(colouring, v)
            base = key - self.position[v][old] * self.place[v]

            for i, c in enumerate(self.lists[v]):
                if c != old and c not in blocked:
                    yield base + i * self.place[v], v, c, old

    def colourings(self, budget=None):
        """
        Every proper colouring, in lexicographic order of list positions, by backtracking
        in vertex order. Raises BudgetExceeded once more than `budget` have been produced.
        """
        colouring = [None] * self.n
        produced = 0
        earlier = [[w for w in self.nbrs[v] if w < v] for v in range(self.n)]

        def extend(v):
            nonlocal produced

            if v == self.n:
                produced += 1
                if budget is not None and produced > budget:
                    raise BudgetExceeded(produced, budget)
                yield tuple(colouring)
                return

            for c in self.lists[v]:
                if any(self.inst.conflicts(v, c, w, colouring[w]) for w in earlier[v]):
                    continue

                colouring[v] = c
                yield from extend(v + 1)

            colouring[v] = None

        yield from extend(0)
