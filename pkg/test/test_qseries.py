import warnings
warnings.simplefilter("error")

import fractions, json, numpy as np
from h2_origami import arith, counting, qseries
from h2_origami.qseries import QSeries

F = fractions.Fraction

ORDER = 2000

def random_series(rng, order):
  return QSeries(F(int(p), int(q)) for p, q in zip(rng.integers(-30, 30, order+1), rng.integers(1, 7, order+1)))

def test_examples():
  e2 = qseries.eisenstein_e2(10)
  e4 = qseries.eisenstein_e4(10)
  zero = QSeries.zero(10)
  one = QSeries.constant(1, 10)

  assert qseries.series_linear([(1, e2), (0, e4)]) == e2
  assert qseries.series_linear([(1, e2), (-1, e2)]) == zero
  assert qseries.corollary_series(10)[5] == 18

  assert qseries.series_mul(e4, one) == e4
  assert qseries.series_mul(e2, e2)[1] == -48
  assert qseries.series_mul(e2, qseries.dilate(e2, 4))[0] == 1

  assert qseries.d_operator(one) == zero
  assert qseries.d_operator(e2)[1] == -24
  assert qseries.d_operator(qseries.phi_form(4, 10))[3] == 96

  assert qseries.dilate(e2, 1) == e2
  assert qseries.dilate(e2, 2)[2] == -24
  assert qseries.dilate(e4, 4)[3] == 0

  assert [e2[0], e2[2], e2[3]] == [1, -72, -96]
  assert [e4[0], e4[1], e4[5]] == [1, 240, 30240]

  phi2 = qseries.phi_form(2, 10)
  phi4 = qseries.phi_form(4, 10)
  assert [phi2[0], phi2[1], phi4[1]] == [1, 24, 8]

  assert qseries.h_series(1, 10)[0] == 1
  assert qseries.h_series(4, 10)[1] == -24
  assert qseries.h_series(1, 10)[2] == 432

  trivial = qseries.DirichletCharacter([1])
  chi2 = qseries.principal_character(2)
  assert qseries.twist(e4, trivial) == e4
  assert qseries.twist(e4, chi2)[2] == 0
  assert qseries.twist(e4, chi2)[1] == 240
  assert qseries.twist(e4, chi2)[0] == 0

def test_operators():
  e2 = qseries.eisenstein_e2(5)
  assert e2 + 1 == QSeries([2, -24, -72, -96, -168, -144])
  assert 2 * e2 == e2 + e2
  assert e2 - e2 == QSeries.zero(5)
  assert -e2 == (-1) * e2
  assert e2 * e2 == qseries.h_series(1, 5)
  assert len(e2) == 6 and e2.order == 5

def test_order_mismatch():
  for function in (
    lambda: qseries.eisenstein_e2(5) + qseries.eisenstein_e2(6),
    lambda: qseries.series_mul(qseries.eisenstein_e2(5), qseries.eisenstein_e2(6)),
    lambda: qseries.series_linear([(1, qseries.eisenstein_e2(5)), (1, qseries.eisenstein_e4(6))]),
  ):
    try:
      function()
    except qseries.OrderMismatchError:
      pass
    else:
      assert False

def test_derivation_and_dilation():
  rng = np.random.default_rng(98765)
  f = random_series(rng, 500)
  g = random_series(rng, 500)
  D = qseries.d_operator
  assert D(f*g) == D(f)*g + f*D(g)
  for k in (2, 3, 4):
    assert qseries.dilate(f*g, k) == qseries.dilate(f, k) * qseries.dilate(g, k)

def test_twist():
  rng = np.random.default_rng(13579)
  f = random_series(rng, 100)
  g = random_series(rng, 100)
  chi2 = qseries.principal_character(2)
  legendre5 = qseries.DirichletCharacter([0, 1, -1, -1, 1])
  for chi in chi2, legendre5:
    assert qseries.twist(3*f - g, chi) == 3*qseries.twist(f, chi) - qseries.twist(g, chi)
  assert qseries.twist(qseries.twist(f, chi2), chi2) == qseries.twist(f, chi2)
  assert qseries.twist(qseries.twist(f, legendre5), legendre5) == qseries.twist(f, qseries.principal_character(5))

def test_characters():
  qseries.DirichletCharacter([0, 1, 0, -1])
  for values in (
    [0, 1, 1, 1],      #2 is not a unit mod 4
    [0, 1, -1, 1, -1], #not multiplicative
    [0, -1],           #chi(1) = -1
    [0, 2, 0],         #value out of range
  ):
    try:
      qseries.DirichletCharacter(values)
    except ValueError:
      pass
    else:
      assert False, values

def test_h_series_coefficients():
  for k in (1, 2, 4):
    h = qseries.h_series(k, ORDER)
    for n in range(1, ORDER+1):
      expected = -24 * (arith.sigma(1, n) + arith.sigma_scaled(1, n, k)) + 576 * arith.s_direct(k, n)
      assert h[n] == expected, (k, n)

def test_fits():
  expected = {
    4: (F(1, 20), F(3, 20), F(4, 5), 0, F(9, 2), 3),
    2: (F(1, 5), F(4, 5), 3, 6),
    1: (1, 12),
  }
  for k, x in expected.items():
    basis = qseries.qm_basis(k, ORDER)
    target = qseries.h_series(k, ORDER)
    result = qseries.fit_in_basis(target, basis)
    assert result.success
    assert result.window == len(basis) + 1
    assert result.x == list(x), (k, result.x)
    assert basis.combination(result.x) == target

  assert qseries.qm_basis(4, 10).names == ("E4", "E4(2z)", "E4(4z)", "DPhi2", "DPhi4", "DE2")

def test_window_six():
  basis = qseries.qm_basis(4, 40)
  target = qseries.h_series(4, 40)
  for start in range(21):
    try:
      qseries.fit_in_basis(target, basis, window=6, start=start)
    except qseries.RankDeficiencyError as e:
      assert e.rank < 6
    else:
      assert False, start
  assert qseries.fit_in_basis(target, basis, window=7).x == [F(1, 20), F(3, 20), F(4, 5), 0, F(9, 2), 3]

def test_not_in_span():
  basis = qseries.qm_basis(1, 30)
  try:
    qseries.fit_in_basis(qseries.eisenstein_e2(30), basis)
  except qseries.NotInSpanError as e:
    assert e.first_failing_index == 2
  else:
    assert False

  e4 = list(qseries.eisenstein_e4(30))
  e4[10] += 1
  try:
    qseries.fit_in_basis(QSeries(e4), basis)
  except qseries.NotInSpanError as e:
    assert e.first_failing_index == 10
  else:
    assert False

  try:
    qseries.fit_in_basis(qseries.eisenstein_e4(30), basis, window=1)
  except ValueError:
    pass
  else:
    assert False

def test_corollary():
  order = 10**4
  series = qseries.corollary_series(order)
  for n in range(1, order+1):
    assert series[n] == counting.a_total(n), n

def test_theorem13():
  series = qseries.theorem13_series(ORDER)
  #(240*28 - 15*288 + 15*96) / 1280
  assert series[3] == 3
  for n in range(ORDER+1):
    assert series[n] == (counting.a_total(n) if n % 2 else 0), n

  twisted = qseries.twist(qseries.corollary_series(ORDER), qseries.principal_character(2))
  assert twisted == series
  refit = qseries.fit_in_basis(twisted, qseries.qm_basis(4, ORDER))
  assert tuple(refit.x) == qseries.THEOREM13_COEFFICIENTS

def test_export():
  series = QSeries([1, F(-1, 2), 0])
  assert qseries.to_tsv(series) == "0\t1/1\n1\t-1/2\n2\t0/1\n"
  assert json.loads(qseries.to_json(series)) == ["1/1", "-1/2", "0/1"]

def main():
  test_examples()
  test_operators()
  test_order_mismatch()
  test_derivation_and_dilation()
  test_twist()
  test_characters()
  test_h_series_coefficients()
  test_fits()
  test_window_six()
  test_not_in_span()
  test_corollary()
  test_theorem13()
  test_export()

if __name__ == "__main__":
  main()
