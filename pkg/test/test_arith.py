import warnings
warnings.simplefilter("error")

import fractions, math, numpy as np
from h2_origami import arith

def test_examples():
  assert arith.sigma(1, 1) == 1
  assert arith.sigma(1, 6) == 12
  assert arith.sigma(3, 5) == 126
  assert arith.sigma(1, 0) == 0
  assert arith.sigma(1, -4) == 0
  assert arith.sigma(1, fractions.Fraction(5, 2)) == 0
  assert arith.sigma(1, fractions.Fraction(6, 2)) == 4

  assert arith.sigma_scaled(3, 8, 4) == 9
  assert arith.sigma_scaled(1, 5, 2) == 0
  assert arith.sigma_scaled(1, 4, 4) == 1

  assert [arith.moebius(n) for n in (1, 6, 9)] == [1, 1, 0]
  assert [arith.euler_phi(n) for n in (1, 5, 12)] == [1, 4, 4]
  assert [arith.local_factor(n) for n in (1, 5, 9)] == [1, fractions.Fraction(24, 25), fractions.Fraction(8, 9)]

  assert arith.s_direct(1, 1) == 0
  assert arith.s_direct(1, 5) == 38
  assert arith.s_direct(4, 5) == 1
  assert arith.s_closed(1, 5) == 38
  assert arith.s_closed(2, 3) == 1
  assert arith.s_closed(4, 5) == 1

def test_errors():
  for function, args in (
    (arith.moebius, (0,)),
    (arith.euler_phi, (0,)),
    (arith.local_factor, (0,)),
    (arith.sigma_scaled, (1, 5, 0)),
    (arith.s_closed, (3, 5)),
    (arith.s_direct, (0, 5)),
  ):
    try:
      function(*args)
    except ValueError:
      pass
    else:
      assert False, (function, args)

def test_sigma_array():
  for ell in (0, 1, 3):
    table = arith.sigma_array(ell, 300)
    np.testing.assert_array_equal(table[1:], [arith.sigma(ell, n) for n in range(1, 301)])
  assert arith.sigma_array(3, 10**5).dtype == object

def test_multiplicative():
  for ell in (0, 1, 2, 3):
    for m in range(1, 120):
      for n in range(1, 120):
        if math.gcd(m, n) == 1:
          assert arith.sigma(ell, m*n) == arith.sigma(ell, m) * arith.sigma(ell, n), (ell, m, n)

def test_moebius_sum():
  for n in range(1, 10**4 + 1):
    assert sum(arith.moebius(d) for d in arith.divisors(n)) == (n == 1), n

def test_s_closed():
  for k in (1, 2, 4):
    for n in range(1, 5001):
      assert arith.s_closed(k, n) == arith.s_direct(k, n), (k, n)

def test_convolution_identities():
  for n in range(1, 10**4 + 1):
    for k in (1, 2, 3):
      lhs = sum(
        r * arith.moebius(r) * sum(arith.moebius(d) * arith.sigma(k, n // (r*d)) for d in arith.divisors(n // r))
        for r in arith.divisors(n)
      )
      rhs = n**k * sum(fractions.Fraction(arith.moebius(r), r**(k-1)) for r in arith.divisors(n))
      assert lhs == rhs, (n, k)
    lhs = sum(
      arith.moebius(r) * sum(fractions.Fraction(arith.moebius(d), d) * arith.sigma(1, n // (r*d)) for d in arith.divisors(n // r))
      for r in arith.divisors(n)
    )
    assert lhs == n * arith.local_factor(n), n

def test_local_factor():
  for n in range(1, 500):
    for k in (1, 2, 3):
      assert arith.local_factor(n, k) == sum(fractions.Fraction(arith.moebius(r), r**k) for r in arith.divisors(n))

def test_dirichlet_convolve():
  N = 2000
  one = arith.ArithTable.from_function(lambda n: 1, N)
  identity = arith.ArithTable.from_function(lambda n: n, N)
  mu = arith.ArithTable.from_function(arith.moebius, N)

  assert arith.dirichlet_convolve(one, one)[6] == 4
  unit = arith.dirichlet_convolve(mu, one)
  assert unit[1] == 1 and unit[12] == 0
  assert all(unit[n] == 0 for n in range(2, N+1))
  sigma1 = arith.dirichlet_convolve(one, identity)
  assert sigma1[6] == 12
  assert sigma1 == arith.ArithTable.from_function(lambda n: arith.sigma(1, n), N)

  rng = np.random.default_rng(123456)
  f, g, h = (arith.ArithTable(fractions.Fraction(int(p), int(q)) for p, q in zip(rng.integers(-20, 20, N), rng.integers(1, 5, N))) for _ in range(3))
  assert arith.dirichlet_convolve(f, g) == arith.dirichlet_convolve(g, f)
  assert arith.dirichlet_convolve(arith.dirichlet_convolve(f, g), h) == arith.dirichlet_convolve(f, arith.dirichlet_convolve(g, h))

  try:
    arith.dirichlet_convolve(one, arith.ArithTable.from_function(lambda n: 1, N-1))
  except arith.BoundMismatchError:
    pass
  else:
    assert False
  try:
    one[N+1]
  except IndexError:
    pass
  else:
    assert False

def main():
  test_examples()
  test_errors()
  test_sigma_array()
  test_multiplicative()
  test_moebius_sum()
  test_s_closed()
  test_convolution_identities()
  test_local_factor()
  test_dirichlet_convolve()

if __name__ == "__main__":
  main()
