import warnings
warnings.simplefilter("error")

import fractions
from h2_origami import arith, counting

F = fractions.Fraction

def odd(lo, hi):
  return range(lo, hi+1, 2)

def test_examples():
  assert [counting.a_primitive(n) for n in (1, 5, 9)] == [0, 18, 108]
  assert [counting.b_primitive(n) for n in (1, 3, 5)] == [0, 0, 9]
  assert [counting.a_total(n) for n in (1, 5, 9)] == [0, 18, 120]
  assert [counting.a_total_by_convolution(n) for n in (1, 5, 9)] == [0, 18, 120]
  assert [counting.b_total(n) for n in (1, 5, 9)] == [0, 9, 81]
  assert counting.a_total(2) == F(9, 16)
  assert isinstance(counting.a_total(9), int)

  assert counting.component_count("two_cyl_odd_heights_A", 5) == 12
  assert counting.component_count("one_cyl_A", 5) == 5
  assert counting.component_count("two_cyl_mixed_A", 5) == 1
  assert counting.component_count("two_cyl_total", 5) == 17
  assert counting.component_count("two_cyl_total", 7) == 55
  assert counting.component_count("two_cyl_total", 5, printed=True) == -3
  assert counting.component_count("two_cyl_even_height", 5) == 5

  assert counting.a_primitive_assembled(1) == 0
  assert counting.a_primitive_assembled(5) == 18
  assert counting.a_primitive_assembled(9) == 108
  assert (counting.alpha_1(5, 1), counting.alpha_2(5, 1), counting.alpha_3(5, 1)) == (12, 1, 5)
  assert (counting.alpha_1(9, 1), counting.alpha_2(9, 1), counting.alpha_3(9, 1)) == (78, 9, 30)
  assert (counting.alpha_1(9, 3), counting.alpha_2(9, 3), counting.alpha_3(9, 3)) == (2, 0, 3)

  assert counting.a_height_primitive(1) == 0
  assert counting.a_height_primitive(3) == 3
  assert counting.a_height_primitive(9) == 117
  assert sum(arith.moebius(d) * counting.a_height_primitive(5 // d) for d in (1, 5)) == 18
  assert counting.a_primitive_from_height_primitive(9) == 108
  assert counting.a_primitive_from_height_primitive(9, printed=True) == 114

  assert counting.breakdown(5) == counting.CountBreakdown(n=5, one_cyl_A=5, two_cyl_odd_heights_A=12, two_cyl_mixed_A=1, total_primitive_A=18)

def test_errors():
  for function in (
    lambda: counting.a_primitive(4),
    lambda: counting.b_primitive(6),
    lambda: counting.b_total(2),
    lambda: counting.a_primitive_assembled(8),
    lambda: counting.a_height_primitive(10),
    lambda: counting.component_count("two_cyl_total", 6),
    lambda: counting.component_count("two_cyl_total", 1),
    lambda: counting.component_count("three_cyl", 5),
    lambda: counting.component_count("one_cyl_A", 5, printed=True),
    lambda: counting.alpha_1(9, 2),
    lambda: counting.CountBreakdown(n=5, one_cyl_A=5, two_cyl_odd_heights_A=12, two_cyl_mixed_A=2, total_primitive_A=18),
  ):
    try:
      function()
    except ValueError:
      pass
    else:
      assert False

def test_table_1():
  for n, (a_primitive, a_total) in counting.TABLE_1.items():
    assert counting.a_primitive(n) == a_primitive, n
    assert counting.a_total(n) == a_total, n

def test_assembly():
  for n in odd(3, 999):
    breakdown = counting.breakdown(n)
    assert breakdown.total_primitive_A == counting.a_primitive(n)
    assert (
      counting.component_count("two_cyl_total", n) - counting.component_count("two_cyl_odd_heights_A", n)
      == counting.component_count("two_cyl_even_height", n)
    ), n

def test_three_routes():
  for n in odd(3, 99):
    assert counting.a_primitive_assembled(n) == counting.a_primitive(n), n
    assert counting.a_primitive_from_height_primitive(n) == counting.a_primitive(n), n

def test_printed_inversion_at_primes():
  for p in (3, 5, 7, 11, 13, 17, 19, 23):
    assert counting.a_primitive_from_height_primitive(p, printed=True) == counting.a_primitive(p)

def test_alpha_2_from_s4():
  for n in odd(1, 99):
    for r in arith.divisors(n):
      m = n // r
      assert counting.alpha_2(n, r) == sum(arith.moebius(d) * arith.s_direct(4, m // d) for d in arith.divisors(m)), (n, r)

def test_from_sums():
  for n in odd(3, 99):
    assert counting.two_cyl_total_from_sums(n) == counting.component_count("two_cyl_total", n), n
    assert counting.two_cyl_even_height_from_sums(n) == counting.component_count("two_cyl_even_height", n), n

def test_convolution():
  for n in range(1, 10**4 + 1):
    assert counting.a_total_by_convolution(n) == counting.a_total(n), n
  for n in odd(1, 999):
    assert counting.b_total(n) == sum(arith.sigma(1, n // d) * counting.b_primitive(d) for d in arith.divisors(n))

def main():
  test_examples()
  test_errors()
  test_table_1()
  test_assembly()
  test_three_routes()
  test_printed_inversion_at_primes()
  test_alpha_2_from_s4()
  test_from_sums()
  test_convolution()

if __name__ == "__main__":
  main()
