"""
Square-tiled surfaces in H(2) in cylinder coordinates.

A one-cylinder surface is a horizontal cylinder of circumference
l1 + l2 + l3 and height h.  Its bottom is made of three saddle connections
of lengths l1, l2, l3, in this order, and its top of the same three in the
opposite order, starting at horizontal offset t.

A two-cylinder surface has a cylinder 1 of width u1 and height h1 sitting on
part of the top of a cylinder 2 of width u2 > u1 and height h2.  The rest of
the top of cylinder 2 is glued to the rest of its own bottom.  t1 and t2 are
the twists of the two cylinders.

Every surface has exactly one set of coordinates in the normalization used
here, so the dataclasses below reject anything else; use one_cyl and
two_cyl to normalize.
"""

import csv, dataclasses, functools, io, json, logging, math, numpy as np, typing
from . import origami as origami_module
from .arith import divisors
from .lattice import LatticeHNF, Z2
from .origami import Origami, WeierstrassReport, canonical_form

logger = logging.getLogger(__name__)

__all__ = [
  "CSV_HEADER", "LatticeHNF", "OneCylSurface", "Surface", "TwoCylSurface", "WeierstrassReport",
  "act", "area", "classify_type", "closed_counts", "cylinder_lattice", "encode", "enumerate_all",
  "from_json_dict", "identify", "inflate", "is_height_primitive", "is_primitive", "one_cyl",
  "period_lattice", "reduce_primitive", "to_csv", "to_json_dict", "to_origami", "two_cyl", "weierstrass",
]

def _least_rotation(l1, l2, l3, t):
  """
  rotate the saddle connections so that (l1, l2, l3) is lexicographically
  least; moving l1 to the end shifts the twist by l2 + l3 - l1
  """
  ell = l1 + l2 + l3
  rotations = []
  for _ in range(3):
    rotations.append(((l1, l2, l3), t % ell))
    l1, l2, l3, t = l2, l3, l1, (t + l2 + l3 - l1) % ell
  lengths = min(rotations)[0]
  t = min(t for l, t in rotations if l == lengths)
  if lengths[0] == lengths[1] == lengths[2]:
    t %= lengths[0]
  return lengths, t

@dataclasses.dataclass(frozen=True)
class OneCylSurface:
  l1: int
  l2: int
  l3: int
  h: int
  t: int

  def __post_init__(self):
    if min(self.l1, self.l2, self.l3, self.h) < 1:
      raise ValueError(f"lengths and height have to be positive: {self}")
    if not 0 <= self.t < self.length:
      raise ValueError(f"t has to be in [0, {self.length}): {self}")
    if _least_rotation(*self.l, self.t) != (self.l, self.t):
      raise ValueError(f"{self} is not in canonical coordinates, use one_cyl()")

  @property
  def l(self): return (self.l1, self.l2, self.l3)
  @property
  def length(self): return self.l1 + self.l2 + self.l3
  @property
  def area(self): return self.length * self.h
  @property
  def kind(self): return "one_cyl"

@dataclasses.dataclass(frozen=True)
class TwoCylSurface:
  h1: int
  h2: int
  u1: int
  u2: int
  t1: int
  t2: int

  def __post_init__(self):
    if min(self.h1, self.h2, self.u1, self.u2) < 1:
      raise ValueError(f"widths and heights have to be positive: {self}")
    if not self.u1 < self.u2:
      raise ValueError(f"need u1 < u2: {self}")
    if not (0 <= self.t1 < self.u1 and 0 <= self.t2 < self.u2):
      raise ValueError(f"need 0 <= ti < ui: {self}, use two_cyl()")

  @property
  def h(self): return (self.h1, self.h2)
  @property
  def u(self): return (self.u1, self.u2)
  @property
  def t(self): return (self.t1, self.t2)
  @property
  def area(self): return self.h1*self.u1 + self.h2*self.u2
  @property
  def kind(self): return "two_cyl"

Surface = typing.Union[OneCylSurface, TwoCylSurface]

def one_cyl(l1, l2, l3, h, t):
  (l1, l2, l3), t = _least_rotation(l1, l2, l3, t)
  return OneCylSurface(l1=l1, l2=l2, l3=l3, h=h, t=t)

def two_cyl(h1, h2, u1, u2, t1, t2):
  return TwoCylSurface(h1=h1, h2=h2, u1=u1, u2=u2, t1=t1 % u1, t2=t2 % u2)

def area(s):
  return s.area

def _one_cyl_count(n):
  return sum(ell * math.comb(ell-1, 2) for ell in divisors(n)) // 3

def _two_cyl_count(n):
  result = 0
  for h1 in range(1, n+1):
    for u1 in range(1, (n-1)//h1 + 1):
      rest = n - h1*u1
      result += sum(u1 * (rest//h2) for h2 in divisors(rest) if rest//h2 > u1)
  return result

def closed_counts(n):
  """
  (number of one-cylinder surfaces, number of two-cylinder surfaces) with n squares
  """
  if n < 3:
    raise ValueError(f"H(2) surfaces have at least 3 squares, got n={n}")
  return _one_cyl_count(n), _two_cyl_count(n)

def _enumerate_one_cyl(n):
  for ell in divisors(n):
    if ell < 3: continue
    for l1 in range(1, ell-1):
      for l2 in range(1, ell-l1):
        l3 = ell - l1 - l2
        if (l1, l2, l3) != min((l1, l2, l3), (l2, l3, l1), (l3, l1, l2)): continue
        twists = ell // 3 if l1 == l2 == l3 else ell
        for t in range(twists):
          yield OneCylSurface(l1=l1, l2=l2, l3=l3, h=n//ell, t=t)

def _enumerate_two_cyl(n):
  for h1 in range(1, n+1):
    for u1 in range(1, (n-1)//h1 + 1):
      rest = n - h1*u1
      for h2 in divisors(rest):
        u2 = rest // h2
        if u2 <= u1: continue
        for t1 in range(u1):
          for t2 in range(u2):
            yield TwoCylSurface(h1=h1, h2=h2, u1=u1, u2=u2, t1=t1, t2=t2)

@functools.lru_cache(maxsize=None)
def _enumerate(n):
  result = sorted([*_enumerate_one_cyl(n), *_enumerate_two_cyl(n)], key=encode)
  logger.debug("%d surfaces with %d squares", len(result), n)
  return tuple(result)

def enumerate_all(n):
  """
  every H(2) surface with n squares, once each, sorted by encode()
  """
  if n < 3:
    raise ValueError(f"H(2) surfaces have at least 3 squares, got n={n}")
  return list(_enumerate(n))

@functools.lru_cache(maxsize=None)
def to_origami(s):
  if isinstance(s, OneCylSurface):
    return _one_cyl_origami(s)
  return _two_cyl_origami(s)

def _one_cyl_origami(s):
  l1, l2, l3 = s.l
  ell = s.length
  squares = np.arange(s.area).reshape(s.h, ell)
  right = np.roll(squares, -1, axis=1)
  up = np.roll(squares, -1, axis=0)
  #top row: the saddle connections come in the order l3, l2, l1 from offset t
  x = (np.arange(ell) - s.t) % ell
  column = np.where(x < l3, l1 + l2 + x, np.where(x < l3 + l2, l1 + x - l3, x - l3 - l2))
  up[-1] = squares[0, column]
  return Origami(right.ravel(), up.ravel())

def _two_cyl_origami(s):
  #cylinder 2 is rows 0..h2-1, cylinder 1 is on top of it
  lower = np.arange(s.h2 * s.u2).reshape(s.h2, s.u2)
  upper = s.h2 * s.u2 + np.arange(s.h1 * s.u1).reshape(s.h1, s.u1)
  right = np.empty(s.area, dtype=np.int64)
  up = np.empty(s.area, dtype=np.int64)
  for block in (lower, upper):
    right[block] = np.roll(block, -1, axis=1)
    up[block[:-1]] = block[1:]

  x = (np.arange(s.u2) - s.t2) % s.u2
  up[lower[-1]] = np.where(x < s.u1, upper[0, np.minimum(x, s.u1-1)], lower[0, x])
  x = (np.arange(s.u1) - s.t1) % s.u1
  up[upper[-1]] = lower[0, x]
  return Origami(right, up)

@functools.lru_cache(maxsize=None)
def period_lattice(s):
  """
  lattice spanned by the holonomies of the saddle connections, computed
  on the origami
  """
  return origami_module.lattice_hnf(to_origami(s))

def cylinder_lattice(s):
  """
  the same lattice, from the saddle connections that can be read off the
  coordinates: the horizontal ones and one crossing each cylinder
  """
  if isinstance(s, OneCylSurface):
    return LatticeHNF.from_generators([(s.l1, 0), (s.l2, 0), (s.l3, 0), (s.t, s.h)])
  return LatticeHNF.from_generators([(s.u1, 0), (s.u2, 0), (s.t1, s.h1), (s.t2, s.h2)])

def is_primitive(s):
  return period_lattice(s) == Z2

def is_height_primitive(s):
  return period_lattice(s).h == 1

def _apply(s, horizontal=1, shear=0, vertical=1):
  """
  image of s under diag(1, vertical) (1 shear; 0 1) diag(horizontal, 1)
  """
  if isinstance(s, OneCylSurface):
    t = s.t * horizontal + shear * s.h
    return one_cyl(s.l1 * horizontal, s.l2 * horizontal, s.l3 * horizontal, s.h * vertical, t)
  return two_cyl(
    h1=s.h1 * vertical, h2=s.h2 * vertical,
    u1=s.u1 * horizontal, u2=s.u2 * horizontal,
    t1=s.t1 * horizontal + shear * s.h1, t2=s.t2 * horizontal + shear * s.h2,
  )

def inflate(s, lam):
  """
  image of the primitive surface s under the matrix (a t; 0 h) of lam;
  the result has lattice of periods lam
  """
  if not is_primitive(s):
    raise ValueError(f"{s} is not primitive")
  return _apply(s, horizontal=lam.a, shear=lam.t, vertical=lam.h)

def reduce_primitive(s):
  """
  (s', lam) with lam the lattice of periods of s and s' = (a t; 0 h)^-1 s primitive
  """
  lam = period_lattice(s)
  if lam == Z2: return s, lam
  a, t, h = lam.a, lam.t, lam.h
  if isinstance(s, OneCylSurface):
    heights = s.h // h
    twist = (s.t - t * heights) % s.length
    if s.h % h or twist % a or any(l % a for l in s.l):
      raise AssertionError(f"{lam} is not the lattice of periods of {s}")
    reduced = one_cyl(s.l1 // a, s.l2 // a, s.l3 // a, heights, twist // a)
  else:
    h1, h2 = s.h1 // h, s.h2 // h
    t1 = (s.t1 - t * h1) % s.u1
    t2 = (s.t2 - t * h2) % s.u2
    if s.h1 % h or s.h2 % h or any(_ % a for _ in (s.u1, s.u2, t1, t2)):
      raise AssertionError(f"{lam} is not the lattice of periods of {s}")
    reduced = two_cyl(h1=h1, h2=h2, u1=s.u1 // a, u2=s.u2 // a, t1=t1 // a, t2=t2 // a)
  return reduced, lam

def weierstrass(s):
  return origami_module.involution_fixed_points(to_origami(s))

def classify_type(s):
  """
  "A" if the surface has one Weierstrass point with integer coordinates,
  "B" if it has three.  Only defined for an odd number of squares.
  """
  if s.area % 2 == 0:
    raise ValueError(f"type is only defined for odd area, {s} has area {s.area}")
  return origami_module.origami_type(to_origami(s))

@functools.lru_cache(maxsize=None)
def _identification_index(n):
  return {canonical_form(to_origami(s)): s for s in _enumerate(n)}

def identify(o):
  """
  the cylinder coordinates of an H(2) origami
  """
  if o.n < 3:
    raise ValueError(f"{o} is not a surface in H(2)")
  try:
    return _identification_index(o.n)[canonical_form(o)]
  except KeyError as e:
    raise ValueError(f"{o} is not a surface in H(2)") from e

def act(s, g, convention="standard"):
  return identify(origami_module.act_generator(to_origami(s), g, convention=convention))

def to_json_dict(s):
  if isinstance(s, OneCylSurface):
    return {"kind": "one_cyl", "l": list(s.l), "h": s.h, "t": s.t}
  return {"kind": "two_cyl", "h": list(s.h), "u": list(s.u), "t": list(s.t)}

def from_json_dict(dct):
  if dct["kind"] == "one_cyl":
    return OneCylSurface(*dct["l"], h=dct["h"], t=dct["t"])
  if dct["kind"] == "two_cyl":
    (h1, h2), (u1, u2), (t1, t2) = dct["h"], dct["u"], dct["t"]
    return TwoCylSurface(h1=h1, h2=h2, u1=u1, u2=u2, t1=t1, t2=t2)
  raise ValueError(f"Unknown surface kind {dct['kind']!r}")

def encode(s):
  return json.dumps(to_json_dict(s), separators=(",", ":"))

CSV_HEADER = ("kind", "l1", "l2", "l3", "h", "t", "h1", "h2", "u1", "u2", "t1", "t2")

def _csv_row(s):
  if isinstance(s, OneCylSurface):
    return ["one_cyl", s.l1, s.l2, s.l3, s.h, s.t] + [""] * 6
  return ["two_cyl"] + [""] * 5 + [s.h1, s.h2, s.u1, s.u2, s.t1, s.t2]

def to_csv(surfaces):
  f = io.StringIO()
  writer = csv.writer(f, lineterminator="\n")
  writer.writerow(CSV_HEADER)
  for s in surfaces:
    writer.writerow(_csv_row(s))
  return f.getvalue()
