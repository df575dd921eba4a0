from recolor.colormodel.instance import available_colours
from recolor.graphcore.graph import Graph, components
from recolor.graphcore.matching import matching_number
from recolor.graphcore.cover import min_vertex_cover
from recolor.schedulers.schedule import (
    PreconditionError,
    RecolourSchedule,
    SchedulerError,
    validate_schedule,
)


class Workspace:
    """
    The colouring being transformed, plus every step taken so far as (v, old, new).
    Every recolouring is checked against the whole graph before it is recorded.
    """

    def __init__(self, inst, colouring):
        self.inst = inst
        self.current = list(colouring)
        self.steps = []

    def recolour(self, v, c):
        old = self.current[v]

        if c == old:
            return False

        if not self.inst.has_colour(v, c):
            raise SchedulerError(f"colour {c} is not available at vertex {v}")

        for w in self.inst.graph.adjacency[v]:
            if self.inst.conflicts(v, c, w, self.current[w]):
                raise SchedulerError(f"recolouring vertex {v} to {c} clashes with vertex {w}")

        self.current[v] = c
        self.steps.append((v, old, c))

        return True

    def fork(self, overrides):
        ws = Workspace(self.inst, self.current)
        for v, c in overrides.items():
            ws.current[v] = c
        return ws


class Task:
    """
    Recolour `vertices` to `target` using only `lists`. Vertices outside the task stay
    fixed; colours clashing with them were struck from the lists when they were removed.
    """

    def __init__(self, inst, vertices, lists, target):
        self.inst = inst
        self.vertices = frozenset(vertices)
        self.lists = lists
        self.target = target

    @classmethod
    def initial(cls, inst, target):
        vertices = range(inst.n)
        return cls(inst, vertices, {v: inst.colours(v) for v in vertices}, {v: target[v] for v in vertices})

    def __len__(self):
        return len(self.vertices)

    def sorted_vertices(self):
        return sorted(self.vertices)

    def neighbours(self, v):
        return self.inst.graph.adjacency[v] & self.vertices

    def degree(self, v):
        return len(self.neighbours(v))

    def edges(self):
        return self.inst.graph.edges_within(self.vertices)

    def is_edgeless(self):
        return not any(self.neighbours(v) for v in self.vertices)

    def components(self):
        return components(self.inst.graph, self.vertices)

    def matching_number(self, vertices=None):
        return matching_number(self.inst.graph, self.vertices if vertices is None else vertices)

    def min_vertex_cover(self):
        return min_vertex_cover(self.inst.graph, self.vertices)

    def conflicts(self, v, c, w, d):
        return self.inst.conflicts(v, c, w, d)

    def restrict(self, ws, vertices):
        """
        Sub-task on `vertices`. Each kept vertex loses the colours that clash with the current
        colour of a removed task neighbour; its current and target colours must survive.
        """
        vertices = frozenset(vertices)
        removed = self.vertices - vertices
        lists = {}

        for v in vertices:
            gone = self.inst.graph.adjacency[v] & removed
            lists[v] = tuple(
                c for c in self.lists[v] if not any(self.conflicts(v, c, w, ws.current[w]) for w in gone)
            )

            if ws.current[v] not in lists[v] or self.target[v] not in lists[v]:
                raise SchedulerError(f"striking colours at vertex {v} removed its current or target colour")

        return Task(self.inst, vertices, lists, {v: self.target[v] for v in vertices})

    def with_target(self, target):
        return Task(self.inst, self.vertices, self.lists, {v: target[v] for v in self.vertices})

    def hits(self, ws, v, c, current=True, target=True):
        """Task neighbours of v whose current (and/or target) colour clashes with c at v."""
        found = []

        for w in sorted(self.neighbours(v)):
            if current and self.conflicts(v, c, w, ws.current[w]):
                found.append((w, "current"))
            if target and self.conflicts(v, c, w, self.target[w]):
                found.append((w, "target"))

        return found

    def free_colours(self, ws, v, avoid_targets=False, exclude=()):
        """
        Colours of the task list of v, ascending, clashing with no neighbour's current colour
        (nor, when asked, with any task neighbour's target) and outside `exclude`.
        """
        forbidden = set(exclude)

        if avoid_targets:
            forbidden |= {self.inst.conflicting_colour(w, self.target[w], v) for w in self.neighbours(v)}

        return available_colours(self.inst, v, ws.current, forbidden, self.lists[v])

    def first_free(self, ws, v, avoid_targets=False, exclude=()):
        options = self.free_colours(ws, v, avoid_targets, exclude)

        if not options:
            raise SchedulerError(f"vertex {v} has no free colour")

        return options[0]

    def finished(self, ws):
        return all(ws.current[v] == self.target[v] for v in self.vertices)

    def digon_matching_number(self, colouring, vertices=None):
        """mu of the digons of the colour-shift digraph from `colouring` to the target."""
        vertices = self.vertices if vertices is None else frozenset(vertices)
        digons = [
            (u, v)
            for u, v in self.inst.graph.edges_within(vertices)
            if self.conflicts(u, self.target[u], v, colouring[v]) and self.conflicts(v, self.target[v], u, colouring[u])
        ]

        return matching_number(Graph(self.inst.n, digons), vertices)

    def distance_lower_bound(self, colouring, vertices=None):
        vertices = self.vertices if vertices is None else frozenset(vertices)
        hamming = sum(1 for v in vertices if colouring[v] != self.target[v])

        return self.digon_matching_number(colouring, vertices) + hamming


def recolour_directly(ws, task):
    """Edgeless task: every vertex goes straight to its target."""
    assert task.is_edgeless(), "direct recolouring needs an independent set"

    for v in task.sorted_vertices():
        ws.recolour(v, task.target[v])


def reverse_run(ws, task, procedure):
    """
    Runs `procedure` with the roles of the current and target colourings swapped, then
    replays its steps backwards. The replay goes through the same colourings in reverse.
    """
    fork = ws.fork(task.target)
    procedure(fork, task.with_target({v: ws.current[v] for v in task.vertices}))

    for v, old, _ in reversed(fork.steps):
        ws.recolour(v, old)

    if not task.finished(ws):
        raise SchedulerError("reversed run did not reach the target")


def park_cover_and_finish(ws, task, cover=None):
    """
    Moves each vertex of a vertex cover S whose colour clashes with a neighbour's target onto a
    colour clashing with no neighbour's current or target colour, recolours V - S, then S.
    """
    cover = task.min_vertex_cover() if cover is None else cover
    cover = sorted(cover)

    for v in cover:
        if task.hits(ws, v, ws.current[v], current=False):
            ws.recolour(v, task.first_free(ws, v, avoid_targets=True))

    for v in task.sorted_vertices():
        if v not in cover:
            ws.recolour(v, task.target[v])

    for v in cover:
        ws.recolour(v, task.target[v])


def each_component(procedure):
    """Lifts a per-component procedure to a whole task."""

    def run(ws, task):
        for component in task.components():
            procedure(ws, task.restrict(ws, component))

    return run


def require_mode(inst, mode, name):
    if inst.mode != mode:
        raise PreconditionError(f"{name} needs a {mode}-mode instance, got {inst.mode}")


def require_list_sizes(inst, name, minimum, rule):
    """`minimum(deg)` is the smallest list size allowed at a vertex of degree deg."""
    for v in range(inst.n):
        size = len(inst.colours(v))
        needed = minimum(inst.graph.degree(v))

        if size < needed:
            raise PreconditionError(
                f"{name} needs lists of size at least {rule}; vertex {v} has degree "
                f"{inst.graph.degree(v)} and {size} colours"
            )


def require_d_plus_2(inst, name):
    require_list_sizes(inst, name, lambda d: d + 2, "deg+2")


def require_2d_plus_1(inst, name):
    require_list_sizes(inst, name, lambda d: 2 * d + 1, "2*deg+1")


def run_scheduler(inst, a, b, procedure, theorem, bound):
    """Runs `procedure` on the whole instance and returns the validated schedule."""
    a = inst.check_colouring(a, "alpha")
    b = inst.check_colouring(b, "beta")

    ws = Workspace(inst, a)
    task = Task.initial(inst, b)
    procedure(ws, task)

    if tuple(ws.current) != b:
        raise SchedulerError(f"{theorem} stopped before reaching beta")

    schedule = RecolourSchedule([(v, new) for v, _, new in ws.steps], theorem, bound)
    ok, diagnostic = validate_schedule(inst, a, b, schedule)

    if not ok:
        raise SchedulerError(f"{theorem} produced an invalid schedule: {diagnostic}")

    return schedule


