"""
Square-tiled surfaces as pairs of permutations (right, up) of the squares
0..n-1: right[s] is the square to the right of s, up[s] the square above it.
"""

import collections, dataclasses, fractions, functools, logging, numpy as np
from .lattice import LatticeHNF

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 10**7
GENERATORS = ("T", "T_inv", "Tprime", "Tprime_inv")
CONVENTIONS = ("standard", "transposed")

class StructuralError(RuntimeError):
  pass

def _permutation(values, name):
  array = np.array(values, dtype=np.int64)
  if array.ndim != 1:
    raise ValueError(f"{name} has to be one dimensional, got shape {array.shape}")
  if not np.array_equal(np.sort(array), np.arange(len(array))):
    raise ValueError(f"{name}={array.tolist()} is not a permutation of 0..{len(array)-1}")
  array.flags.writeable = False
  return array

def _inverse(permutation):
  result = np.empty_like(permutation)
  result[permutation] = np.arange(len(permutation))
  result.flags.writeable = False
  return result

def _cycles(permutation):
  seen = np.zeros(len(permutation), dtype=bool)
  cycles = []
  for start in range(len(permutation)):
    if seen[start]: continue
    cycle = []
    x = start
    while not seen[x]:
      seen[x] = True
      cycle.append(x)
      x = int(permutation[x])
    cycles.append(tuple(cycle))
  return cycles

class Origami:
  def __init__(self, right, up):
    self.__right = _permutation(right, "right")
    self.__up = _permutation(up, "up")
    if len(self.__right) != len(self.__up):
      raise ValueError(f"right and up act on different numbers of squares: {len(self.__right)}, {len(self.__up)}")
    if not len(self.__right):
      raise ValueError("An origami needs at least one square")

  @property
  def n(self): return len(self.__right)
  @property
  def right(self): return self.__right
  @property
  def up(self): return self.__up

  @functools.cached_property
  def right_inverse(self): return _inverse(self.__right)
  @functools.cached_property
  def up_inverse(self): return _inverse(self.__up)

  @functools.cached_property
  def commutator(self):
    """
    right o up o right^-1 o up^-1
    """
    return self.__right[self.__up[self.right_inverse[self.up_inverse]]]

  @functools.cached_property
  def vertex_map(self):
    """
    Going once counterclockwise around the bottom left corner of s ends at the
    bottom left corner of vertex_map[s].  The cycles are the vertices of the
    surface, and a cycle of length k is a cone point of angle 2 pi k.
    """
    return self.__up[self.__right[self.up_inverse[self.right_inverse]]]

  @functools.cached_property
  def vertex_classes(self):
    classes = np.empty(self.n, dtype=np.int64)
    for i, cycle in enumerate(_cycles(self.vertex_map)):
      classes[list(cycle)] = i
    return classes

  def cycle_type(self, permutation):
    return sorted(len(c) for c in _cycles(permutation))

  @functools.cached_property
  def is_transitive(self):
    seen = {0}
    queue = collections.deque([0])
    while queue:
      s = queue.popleft()
      for t in (self.__right[s], self.__up[s]):
        t = int(t)
        if t not in seen:
          seen.add(t)
          queue.append(t)
    return len(seen) == self.n

  def relabel(self, permutation):
    """
    the same surface with square s renamed to permutation[s]
    """
    permutation = _permutation(permutation, "permutation")
    if len(permutation) != self.n:
      raise ValueError(f"relabeling of {len(permutation)} squares for an origami with {self.n}")
    right = np.empty(self.n, dtype=np.int64)
    up = np.empty(self.n, dtype=np.int64)
    right[permutation] = permutation[self.__right]
    up[permutation] = permutation[self.__up]
    return type(self)(right, up)

  def to_json_dict(self):
    return {"n": self.n, "right": self.__right.tolist(), "up": self.__up.tolist()}

  @classmethod
  def from_json_dict(cls, dct):
    result = cls(dct["right"], dct["up"])
    if result.n != dct["n"]:
      raise ValueError(f"n={dct['n']} doesn't match the permutations of length {result.n}")
    return result

  def __eq__(self, other):
    if not isinstance(other, Origami): return NotImplemented
    return np.array_equal(self.__right, other.__right) and np.array_equal(self.__up, other.__up)
  def __hash__(self):
    return hash((self.__right.tobytes(), self.__up.tobytes()))
  def __repr__(self):
    return f"{type(self).__name__}(right={self.__right.tolist()}, up={self.__up.tolist()})"

def validate_stratum(o):
  """
  connected, with a single cone point of angle 6 pi and no other singularity
  """
  if not isinstance(o, Origami):
    o = Origami(*o)
  if not o.is_transitive: return False
  return o.cycle_type(o.commutator) == [1] * (o.n-3) + [3]

def act_generator(o, g, convention="standard"):
  """
  horizontal (T) and vertical (Tprime) shears and their inverses
  """
  r, u = o.right, o.up
  if convention == "standard":
    images = {
      "T": lambda: (r, u[o.right_inverse]),
      "T_inv": lambda: (r, u[r]),
      "Tprime": lambda: (r[o.up_inverse], u),
      "Tprime_inv": lambda: (r[u], u),
    }
  elif convention == "transposed":
    images = {
      "T": lambda: (r, o.right_inverse[u]),
      "T_inv": lambda: (r, r[u]),
      "Tprime": lambda: (o.up_inverse[r], u),
      "Tprime_inv": lambda: (u[r], u),
    }
  else:
    raise ValueError(f"Unknown convention {convention!r}, choices are {CONVENTIONS}")
  try:
    image = images[g]
  except KeyError as e:
    raise ValueError(f"Unknown generator {g!r}, choices are {GENERATORS}") from e
  return Origami(*image())

def _relabeled_from(o, start):
  label = {start: 0}
  order = [start]
  i = 0
  while i < len(order):
    s = order[i]
    i += 1
    for t in (int(o.right[s]), int(o.up[s])):
      if t not in label:
        label[t] = len(order)
        order.append(t)
  if len(order) != o.n:
    raise ValueError(f"{o} is not connected")
  right = [label[int(o.right[s])] for s in order]
  up = [label[int(o.up[s])] for s in order]
  return np.array(right + up, dtype=">u4").tobytes()

def canonical_form(o):
  """
  bytes that are equal for two origamis exactly when they differ by a
  relabeling of the squares: relabel in breadth first order from every
  start square, following right before up, and keep the smallest encoding
  """
  return min(_relabeled_from(o, start) for start in range(o.n))

def from_canonical_form(code):
  values = np.frombuffer(code, dtype=">u4").astype(np.int64)
  if len(values) % 2:
    raise ValueError("canonical form has an odd number of entries")
  n = len(values) // 2
  return Origami(values[:n], values[n:])

def square_positions(o):
  """
  integer positions of the squares, unfolded along a breadth first
  spanning tree
  """
  positions = np.zeros((o.n, 2), dtype=np.int64)
  seen = np.zeros(o.n, dtype=bool)
  seen[0] = True
  queue = collections.deque([0])
  while queue:
    s = queue.popleft()
    for t, step in ((o.right[s], (1, 0)), (o.up[s], (0, 1)), (o.right_inverse[s], (-1, 0)), (o.up_inverse[s], (0, -1))):
      if not seen[t]:
        seen[t] = True
        positions[t] = positions[s] + step
        queue.append(t)
  if not seen.all():
    raise ValueError(f"{o} is not connected")
  return positions

def period_generators(o):
  """
  the nonzero defects pos[s] + step - pos[neighbor] over all right and up
  edges; they generate the lattice of periods
  """
  positions = square_positions(o)
  squares = np.arange(o.n)
  defects = np.concatenate([
    positions[squares] + (1, 0) - positions[o.right],
    positions[squares] + (0, 1) - positions[o.up],
  ])
  defects = defects[np.any(defects != 0, axis=1)]
  return [tuple(int(_) for _ in v) for v in np.unique(defects, axis=0)]

def lattice_hnf(o):
  return LatticeHNF.from_generators(period_generators(o))

@dataclasses.dataclass(frozen=True)
class WeierstrassPoint:
  kind: str  #center, vertical_edge, horizontal_edge or vertex
  square: int
  position: tuple

  @property
  def integer(self):
    return self.kind == "vertex"

  def to_json_dict(self):
    return {
      "kind": self.kind,
      "square": self.square,
      "position": [f"{c.numerator}/{c.denominator}" for c in self.position],
      "integer": self.integer,
    }

@dataclasses.dataclass(frozen=True)
class WeierstrassReport:
  points: tuple

  def __post_init__(self):
    if len(self.points) != 6:
      raise StructuralError(f"found {len(self.points)} fixed points of the hyperelliptic involution instead of 6")

  @property
  def integer_count(self):
    return sum(p.integer for p in self.points)

  def to_json_dict(self):
    return {"integer_count": self.integer_count, "points": [p.to_json_dict() for p in self.points]}

def _propagate_involution(o, seed):
  """
  the map phi with phi(0) = seed, phi o right = right^-1 o phi and
  phi o up = up^-1 o phi, or None if the constraints contradict
  """
  r, u, ri, ui = (p.tolist() for p in (o.right, o.up, o.right_inverse, o.up_inverse))
  phi = [-1] * o.n
  phi[0] = seed
  queue = collections.deque([0])
  while queue:
    s = queue.popleft()
    image = phi[s]
    for t, value in ((r[s], ri[image]), (u[s], ui[image]), (ri[s], r[image]), (ui[s], u[image])):
      if phi[t] == -1:
        phi[t] = value
        queue.append(t)
      elif phi[t] != value:
        return None
  if -1 in phi or len(set(phi)) != o.n:
    return None
  return np.array(phi, dtype=np.int64)

def _fixed_points(o, phi):
  positions = square_positions(o)
  half = fractions.Fraction(1, 2)
  def point(kind, s, dx, dy):
    x, y = positions[s]
    return WeierstrassPoint(kind=kind, square=int(s), position=(int(x) + dx, int(y) + dy))

  points = []
  squares = np.arange(o.n)
  for s in squares[phi == squares]:
    points.append(point("center", s, half, half))
  for s in squares[phi == o.right]:
    points.append(point("vertical_edge", s, fractions.Fraction(1), half))
  for s in squares[phi == o.up]:
    points.append(point("horizontal_edge", s, half, fractions.Fraction(1)))
  #the bottom left corner of s goes to the top right corner of phi(s),
  #which is the bottom left corner of up(right(phi(s)))
  classes = o.vertex_classes
  opposite = o.up[o.right[phi]]
  for cycle in _cycles(o.vertex_map):
    s = cycle[0]
    if classes[opposite[s]] == classes[s]:
      points.append(point("vertex", s, fractions.Fraction(0), fractions.Fraction(0)))
  return points

def involution_fixed_points(o):
  """
  Find the hyperelliptic involution, which lifts -identity, and its six
  fixed points: centers of squares, midpoints of edges, and vertices.
  Only the vertices have integer coordinates.
  """
  if not validate_stratum(o):
    raise StructuralError(f"{o} is not a surface in H(2)")
  candidates = []
  for seed in range(o.n):
    phi = _propagate_involution(o, seed)
    if phi is None: continue
    if not np.array_equal(phi[phi], np.arange(o.n)): continue
    points = _fixed_points(o, phi)
    logger.debug("phi(0)=%d gives an involution with %d fixed points", seed, len(points))
    if len(points) == 6:
      candidates.append(points)
  if len(candidates) != 1:
    raise StructuralError(f"found {len(candidates)} involutions with 6 fixed points on {o}, expected exactly one")
  return WeierstrassReport(points=tuple(candidates[0]))

def origami_type(o):
  if o.n % 2 == 0:
    raise ValueError(f"type A/B is only defined for an odd number of squares, got {o.n}")
  count = involution_fixed_points(o).integer_count
  if count == 1: return "A"
  if count == 3: return "B"
  raise StructuralError(f"{count} integer Weierstrass points on {o}, expected 1 or 3")

def primitive_origamis(n):
  """
  all primitive H(2) origamis with n squares, up to relabeling, sorted by
  canonical form
  """
  from . import surfaces
  codes = set()
  for s in surfaces.enumerate_all(n):
    if surfaces.is_primitive(s):
      codes.add(canonical_form(surfaces.to_origami(s)))
  return [from_canonical_form(code) for code in sorted(codes)]

@dataclasses.dataclass(frozen=True)
class Orbit:
  representative: Origami
  size: int
  type: str
  members: frozenset = dataclasses.field(repr=False, compare=False)

  def to_json_dict(self):
    return {"size": self.size, "type": self.type, "representative": self.representative.to_json_dict()}

@dataclasses.dataclass(frozen=True)
class OrbitReport:
  n: int
  orbits: tuple
  complete: bool = True

  @property
  def sizes(self):
    return tuple(orbit.size for orbit in self.orbits)
  @property
  def total(self):
    return sum(self.sizes)

  def to_json_dict(self):
    return {"n": self.n, "orbits": [orbit.to_json_dict() for orbit in self.orbits]}

class OrbitSearchError(RuntimeError):
  def __init__(self, message, report, visited):
    super().__init__(message)
    self.report = report
    self.visited = visited

def _orbit_type(codes):
  types = {origami_type(from_canonical_form(code)) for code in codes}
  if len(types) != 1:
    raise StructuralError(f"orbit mixes types {sorted(types)}")
  return types.pop()

def _orbit(codes):
  representative = min(codes)
  return Orbit(representative=from_canonical_form(representative), size=len(codes), type=_orbit_type(codes), members=frozenset(codes))

def orbit_decomposition(n, max_states=DEFAULT_MAX_STATES, convention="standard", generators=GENERATORS):
  """
  Split the primitive H(2) origamis with n squares into orbits of the
  shears by breadth first search over canonical forms.
  """
  if n < 3 or n % 2 == 0:
    raise ValueError(f"orbit_decomposition needs odd n >= 3, got {n}")
  primitive = {canonical_form(o) for o in primitive_origamis(n)}
  logger.info("%d primitive origamis with %d squares", len(primitive), n)

  assigned = set()
  orbits = []
  for seed in sorted(primitive):
    if seed in assigned: continue
    members = {seed}
    queue = collections.deque([seed])
    while queue:
      o = from_canonical_form(queue.popleft())
      for g in generators:
        code = canonical_form(act_generator(o, g, convention=convention))
        if code in members: continue
        if code not in primitive:
          raise StructuralError(f"{g} maps a primitive origami to {from_canonical_form(code)}, which is not a primitive H(2) origami")
        members.add(code)
        queue.append(code)
        if len(assigned) + len(members) > max_states:
          partial = OrbitReport(n=n, orbits=tuple(orbits), complete=False)
          raise OrbitSearchError(f"visited more than max_states={max_states} origamis", report=partial, visited=len(assigned) + len(members))
    orbit = _orbit(members)
    logger.info("orbit of size %d, type %s", orbit.size, orbit.type)
    orbits.append(orbit)
    assigned |= members

  if len(assigned) != len(primitive):
    raise StructuralError(f"orbits cover {len(assigned)} of {len(primitive)} primitive origamis")
  orbits.sort(key=lambda orbit: (orbit.type, -orbit.size, canonical_form(orbit.representative)))
  return OrbitReport(n=n, orbits=tuple(orbits))
