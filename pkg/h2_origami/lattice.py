import dataclasses, math, sympy

@dataclasses.dataclass(frozen=True, order=True)
class LatticeHNF:
  """
  The sublattice of Z^2 spanned by (a, 0) and (t, h), with 0 <= t < a.
  Every sublattice of finite index has exactly one such basis.
  """
  a: int
  t: int
  h: int

  def __post_init__(self):
    if self.a < 1 or self.h < 1:
      raise ValueError(f"a and h have to be positive: {self}")
    if not 0 <= self.t < self.a:
      raise ValueError(f"t has to be in [0, a): {self}")

  @property
  def index(self): return self.a * self.h
  @property
  def matrix(self): return ((self.a, self.t), (0, self.h))

  def contains(self, vector):
    x, y = vector
    if y % self.h: return False
    return (x - (y // self.h) * self.t) % self.a == 0

  @classmethod
  def from_generators(cls, vectors):
    vectors = [(int(x), int(y)) for x, y in vectors]
    #(x0, h): a lattice vector whose height is the gcd of all heights
    x0 = h = 0
    for x, y in vectors:
      if not y: continue
      s, r, g = sympy.gcdex(h, y)
      x0, h = int(s*x0 + r*x), int(g)
    if h == 0:
      raise ValueError(f"{vectors} don't span a lattice of finite index")
    a = 0
    for x, y in vectors:
      a = math.gcd(a, x - (y // h) * x0)
    if a == 0:
      raise ValueError(f"{vectors} don't span a lattice of finite index")
    return cls(a=a, t=x0 % a, h=h)

  def __str__(self):
    return f"({self.a}, {self.t}, {self.h})"

Z2 = LatticeHNF(1, 0, 1)

def lattices_of_index(d):
  """
  all sublattices of index d, in (a, t, h) order; there are sigma_1(d) of them
  """
  if d < 1:
    raise ValueError(f"index has to be positive, got {d}")
  return [LatticeHNF(a, t, d // a) for a in sympy.divisors(d) for t in range(a)]

def height_primitive_lattices(d):
  """
  the d sublattices of index d with h = 1
  """
  if d < 1:
    raise ValueError(f"index has to be positive, got {d}")
  return [LatticeHNF(d, t, 1) for t in range(d)]
