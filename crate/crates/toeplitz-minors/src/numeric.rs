//! Floating-point verification channel: Fourier coefficients of a
//! concrete symbol, finite minor matrices, determinant ratios via LU
//! factorization, and the three-way cross-check against the two exact
//! formulas.

use num::complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bd::bd_poly;
use crate::error::Error;
use crate::partition::Partition;
use crate::symfunc::SymbolSpec;
use crate::tw::tw_poly_auto;

/// Extra coefficients computed beyond what the minor matrices strictly
/// index; finite-support symbols decay super-exponentially, so this is a
/// generous guard band.
const TRUNCATION_GUARD: u32 = 32;

/// How far a pivot may fall below its row's magnitude before the matrix
/// is treated as numerically singular.
const PIVOT_TOLERANCE: f64 = 1e-14;

/// Absolute floor on determinant magnitudes in the ratio denominator:
/// below 1e-300 the log-form ratio is meaningless.
const LOG_DET_FLOOR: f64 = -690.7755; // ~ln(1e-300)

/// Truncated Fourier data of a symbol: the one-sided factor coefficients
/// h and h-tilde, and the full coefficients d_m for |m| <= N.
#[derive(Clone, Debug)]
pub struct FourierData {
    h: Vec<Complex64>,
    h_tilde: Vec<Complex64>,
    d: Vec<Complex64>,
    truncation_hint: f64,
}

/// Coefficients h_0..h_N of exp(sum_k p_k t^k / k), via the recurrence
/// n h_n = sum_{k=1}^{n} p_k h_{n-k}; h_0 = 1. The same recurrence on the
/// tilde values gives h-tilde.
pub fn h_coeffs(spec: &SymbolSpec, big_n: u32) -> Vec<Complex64> {
    h_from_values(&spec.p, big_n)
}

fn h_from_values(values: &[Complex64], big_n: u32) -> Vec<Complex64> {
    let mut h = Vec::with_capacity(big_n as usize + 1);
    h.push(Complex64::new(1.0, 0.0));
    for n in 1..=big_n as usize {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=n.min(values.len()) {
            acc += values[k - 1] * h[n - k];
        }
        h.push(acc / n as f64);
    }
    h
}

/// Builds the full Fourier data for |m| <= N by convolving the two
/// one-sided factors: d_m = sum_j h_(m+j) * ht_j over the truncated
/// range. The reported truncation hint is |h_(N+1)| + |ht_(N+1)|.
pub fn d_coeffs(spec: &SymbolSpec, big_n: u32) -> FourierData {
    let h_ext = h_from_values(&spec.p, big_n + 1);
    let ht_ext = h_from_values(&spec.p_tilde, big_n + 1);
    let truncation_hint = h_ext[big_n as usize + 1].norm() + ht_ext[big_n as usize + 1].norm();
    let h = h_ext[..=big_n as usize].to_vec();
    let h_tilde = ht_ext[..=big_n as usize].to_vec();

    let n = big_n as i64;
    let mut d = Vec::with_capacity(2 * big_n as usize + 1);
    for m in -n..=n {
        let mut acc = Complex64::new(0.0, 0.0);
        let j_lo = 0.max(-m);
        let j_hi = n - 0.max(m);
        for j in j_lo..=j_hi {
            acc += h[(m + j) as usize] * h_tilde[j as usize];
        }
        d.push(acc);
    }
    FourierData {
        h,
        h_tilde,
        d,
        truncation_hint,
    }
}

impl FourierData {
    /// Largest index N for which d_m is stored (|m| <= N).
    pub fn max_index(&self) -> i64 {
        (self.d.len() as i64 - 1) / 2
    }

    pub fn h(&self) -> &[Complex64] {
        &self.h
    }

    pub fn h_tilde(&self) -> &[Complex64] {
        &self.h_tilde
    }

    /// Fourier coefficient d_m; errors if m is outside the truncation.
    pub fn d(&self, m: i64) -> Result<Complex64, Error> {
        let max = self.max_index();
        if m < -max || m > max {
            return Err(Error::FourierIndexOutOfRange { index: m, max });
        }
        Ok(self.d[(m + max) as usize])
    }

    /// Heuristic bound on the coefficients dropped by the truncation.
    pub fn truncation_hint(&self) -> f64 {
        self.truncation_hint
    }
}

/// The n x n minor matrix with entry (i, j) = d_(lambda_i - mu_j - i + j),
/// 1-based, parts beyond the partition lengths read as zero. Row-major.
pub fn minor_matrix(
    fd: &FourierData,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Vec<Vec<Complex64>>, Error> {
    let required = lambda.length().max(mu.length());
    if n < required {
        return Err(Error::MatrixTooSmall { n, required });
    }
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let index = lambda[i - 1] as i64 - mu[j - 1] as i64 - i as i64 + j as i64;
                    fd.d(index)
                })
                .collect()
        })
        .collect()
}

/// A determinant kept as log-magnitude plus phase so that ratios of huge
/// or tiny determinants never overflow. `log_mag` is -inf for an exactly
/// or numerically singular matrix.
#[derive(Clone, Copy, Debug)]
pub struct LogDet {
    pub log_mag: f64,
    pub phase: f64,
}

impl LogDet {
    pub fn is_zero(&self) -> bool {
        self.log_mag == f64::NEG_INFINITY
    }

    pub fn value(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.log_mag.exp(), self.phase)
    }
}

/// Determinant via LU decomposition with partial pivoting, accumulated
/// in log form as the product of the pivots (row swaps contribute a
/// half-turn of phase each).
pub fn lu_log_det(matrix: &[Vec<Complex64>]) -> LogDet {
    let n = matrix.len();
    let mut a: Vec<Complex64> = matrix.iter().flatten().copied().collect();
    assert_eq!(a.len(), n * n, "matrix must be square");
    let mut log_mag = 0.0f64;
    let mut phase = 0.0f64;
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_mag = a[col * n + col].norm();
        for row in col + 1..n {
            let mag = a[row * n + col].norm();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        let row_max = (col..n)
            .map(|j| a[pivot_row * n + j].norm())
            .fold(0.0f64, f64::max);
        if pivot_mag == 0.0 || pivot_mag < PIVOT_TOLERANCE * row_max {
            return LogDet {
                log_mag: f64::NEG_INFINITY,
                phase: 0.0,
            };
        }
        if pivot_row != col {
            for j in 0..n {
                a.swap(col * n + j, pivot_row * n + j);
            }
            phase += std::f64::consts::PI;
        }
        let pivot = a[col * n + col];
        log_mag += pivot.norm().ln();
        phase += pivot.arg();
        for row in col + 1..n {
            let factor = a[row * n + col] / pivot;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col + 1..n {
                let sub = factor * a[col * n + j];
                a[row * n + j] -= sub;
            }
        }
    }
    LogDet { log_mag, phase }
}

fn ratio_at(
    spec: &SymbolSpec,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Complex64, Error> {
    let widest = lambda[0].max(mu[0]);
    let truncation = n as u32 + widest + TRUNCATION_GUARD;
    let fd = d_coeffs(spec, truncation);
    let numerator = lu_log_det(&minor_matrix(&fd, lambda, mu, n)?);
    let toeplitz = lu_log_det(&minor_matrix(
        &fd,
        &Partition::empty(),
        &Partition::empty(),
        n,
    )?);
    if toeplitz.is_zero() || toeplitz.log_mag < LOG_DET_FLOOR {
        return Err(Error::SingularDenominator { n });
    }
    if numerator.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(Complex64::from_polar(
        (numerator.log_mag - toeplitz.log_mag).exp(),
        numerator.phase - toeplitz.phase,
    ))
}

/// Determinant ratio det(M_n^{lambda,mu}) / det(M_n) for each requested
/// matrix size. The sequence stabilizes as n grows.
pub fn ratio_sequence(
    spec: &SymbolSpec,
    lambda: &Partition,
    mu: &Partition,
    n_values: &[usize],
) -> Result<Vec<Complex64>, Error> {
    n_values
        .iter()
        .map(|&n| ratio_at(spec, lambda, mu, n))
        .collect()
}

/// Comparison of the three computations of the same limit: the numeric
/// determinant ratio at size n and the two exact polynomials evaluated
/// at the symbol.
#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
    pub ratio_numeric: Complex64,
    pub bd_value: Complex64,
    pub tw_value: Complex64,
    pub max_discrepancy: f64,
    pub converged: bool,
}

impl Serialize for CrossCheckReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("CrossCheckReport", 8)?;
        state.serialize_field("lambda", &self.lambda)?;
        state.serialize_field("mu", &self.mu)?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field(
            "ratio_numeric",
            &[self.ratio_numeric.re, self.ratio_numeric.im],
        )?;
        state.serialize_field("bd_value", &[self.bd_value.re, self.bd_value.im])?;
        state.serialize_field("tw_value", &[self.tw_value.re, self.tw_value.im])?;
        state.serialize_field("max_discrepancy", &self.max_discrepancy)?;
        state.serialize_field("converged", &self.converged)?;
        state.end()
    }
}

/// Runs all three computations for (lambda, mu) at size n and reports the
/// largest pairwise discrepancy. The two exact values come from the same
/// polynomial identity, so their gap is pure floating rounding; the
/// numeric ratio carries the truncation error of the finite matrix.
pub fn cross_check(
    spec: &SymbolSpec,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    tol: f64,
) -> Result<CrossCheckReport, Error> {
    assert!(tol > 0.0, "tolerance must be positive");
    let ratio_numeric = ratio_at(spec, lambda, mu, n)?;
    let bd_value = bd_poly(lambda, mu).evaluate(spec);
    let tw_value = tw_poly_auto(lambda, mu).evaluate(spec);
    let max_discrepancy = [
        (bd_value - tw_value).norm(),
        (bd_value - ratio_numeric).norm(),
        (tw_value - ratio_numeric).norm(),
    ]
    .into_iter()
    .fold(0.0f64, f64::max);
    Ok(CrossCheckReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
        ratio_numeric,
        bd_value,
        tw_value,
        max_discrepancy,
        converged: max_discrepancy <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn h_coeffs_trivial_symbol() {
        let spec = SymbolSpec::from_real(&[], &[]);
        let h = h_coeffs(&spec, 5);
        assert_eq!(h[0], c(1.0, 0.0));
        for value in &h[1..] {
            assert_eq!(*value, c(0.0, 0.0));
        }
    }

    #[test]
    fn h_coeffs_exponential_series() {
        // p_1 = 1, rest zero: the one-sided factor is exp(t), h_n = 1/n!
        let spec = SymbolSpec::from_real(&[1.0], &[]);
        let h = h_coeffs(&spec, 10);
        let mut factorial = 1.0;
        for (n, value) in h.iter().enumerate() {
            if n > 0 {
                factorial *= n as f64;
            }
            assert!((value - c(1.0 / factorial, 0.0)).norm() < 1e-15, "n={}", n);
        }
    }

    #[test]
    fn h_coeffs_even_symbol() {
        // p_2 = 2, rest zero: exp(t^2)
        let spec = SymbolSpec::from_real(&[0.0, 2.0], &[]);
        let h = h_coeffs(&spec, 4);
        let expected = [1.0, 0.0, 1.0, 0.0, 0.5];
        for (n, &e) in expected.iter().enumerate() {
            assert!((h[n] - c(e, 0.0)).norm() < 1e-15, "n={}", n);
        }
    }

    /// Truncated product of exp(p_k t^k / k) series, multiplied term by
    /// term; independent of the recurrence.
    fn h_series_oracle(values: &[Complex64], big_n: usize) -> Vec<Complex64> {
        let mut series = vec![c(0.0, 0.0); big_n + 1];
        series[0] = c(1.0, 0.0);
        for (idx, &pk) in values.iter().enumerate() {
            let k = idx + 1;
            // exp(pk/k * t^k) truncated
            let mut factor = vec![c(0.0, 0.0); big_n + 1];
            let mut term = c(1.0, 0.0);
            let mut exponent = 0usize;
            let mut j = 0u32;
            while exponent <= big_n {
                factor[exponent] += term;
                j += 1;
                term *= pk / k as f64 / j as f64;
                exponent += k;
            }
            let mut next = vec![c(0.0, 0.0); big_n + 1];
            for a in 0..=big_n {
                if series[a] == c(0.0, 0.0) {
                    continue;
                }
                for b in 0..=big_n - a {
                    next[a + b] += series[a] * factor[b];
                }
            }
            series = next;
        }
        series
    }

    #[test]
    fn h_recurrence_matches_series_oracle() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next_float = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 2000) as f64 / 1000.0 - 1.0
        };
        for _ in 0..20 {
            let values: Vec<Complex64> = (0..4).map(|_| c(next_float(), next_float())).collect();
            let spec = SymbolSpec::new(values.clone(), vec![]);
            let by_recurrence = h_coeffs(&spec, 30);
            let by_series = h_series_oracle(&values, 30);
            for n in 0..=30 {
                assert!(
                    (by_recurrence[n] - by_series[n]).norm() < 1e-12,
                    "n={} rec={} series={}",
                    n,
                    by_recurrence[n],
                    by_series[n]
                );
            }
        }
    }

    #[test]
    fn d_coeffs_trivial_symbol() {
        let fd = d_coeffs(&SymbolSpec::from_real(&[], &[]), 6);
        assert_eq!(fd.d(0).unwrap(), c(1.0, 0.0));
        for m in 1..=6i64 {
            assert_eq!(fd.d(m).unwrap(), c(0.0, 0.0));
            assert_eq!(fd.d(-m).unwrap(), c(0.0, 0.0));
        }
        assert_eq!(fd.truncation_hint(), 0.0);
    }

    #[test]
    fn d_coeffs_one_sided_symbol() {
        let spec = SymbolSpec::from_real(&[0.5, 0.25], &[]);
        let fd = d_coeffs(&spec, 12);
        for m in 0..=12i64 {
            assert_eq!(fd.d(m).unwrap(), fd.h()[m as usize]);
        }
        for m in 1..=12i64 {
            assert_eq!(fd.d(-m).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn d_coeffs_bessel_pattern() {
        // p_1 = pt_1 = z: d_m = sum_j z^(m+2j) / ((m+j)! j!)
        let z = 0.7;
        let fd = d_coeffs(&SymbolSpec::from_real(&[z], &[z]), 40);
        for m in 0..=3i64 {
            let mut expected = 0.0;
            let mut numerator = z.powi(m as i32);
            let mut mj_fact: f64 = (1..=m).map(|x| x as f64).product();
            let mut j_fact = 1.0;
            for j in 0..30i64 {
                if j > 0 {
                    numerator *= z * z;
                    mj_fact *= (m + j) as f64;
                    j_fact *= j as f64;
                }
                expected += numerator / (mj_fact * j_fact);
            }
            assert!(
                (fd.d(m).unwrap() - c(expected, 0.0)).norm() < 1e-12,
                "m={}",
                m
            );
            assert!(
                (fd.d(-m).unwrap() - c(expected, 0.0)).norm() < 1e-12,
                "m=-{}",
                m
            );
        }
    }

    #[test]
    fn d_index_out_of_range_is_an_error() {
        let fd = d_coeffs(&SymbolSpec::from_real(&[0.5], &[0.5]), 4);
        assert!(matches!(
            fd.d(5),
            Err(Error::FourierIndexOutOfRange { index: 5, max: 4 })
        ));
        assert!(fd.d(-4).is_ok());
    }

    #[test]
    fn minor_matrix_index_pattern() {
        // lambda=(2,1), mu=(1), n=3 follows the documented index grid
        let fd = d_coeffs(&SymbolSpec::from_real(&[0.7, 0.3, 0.1], &[0.4, 0.2]), 16);
        let matrix = minor_matrix(&fd, &p(&[2, 1]), &p(&[1]), 3).unwrap();
        let pattern: [[i64; 3]; 3] = [[1, 3, 4], [-1, 1, 2], [-3, -1, 0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(matrix[i][j], fd.d(pattern[i][j]).unwrap(), "({},{})", i, j);
            }
        }
    }

    #[test]
    fn minor_matrix_plain_toeplitz() {
        let fd = d_coeffs(&SymbolSpec::from_real(&[0.3], &[0.6]), 8);
        let matrix = minor_matrix(&fd, &Partition::empty(), &Partition::empty(), 2).unwrap();
        assert_eq!(matrix[0][0], fd.d(0).unwrap());
        assert_eq!(matrix[0][1], fd.d(1).unwrap());
        assert_eq!(matrix[1][0], fd.d(-1).unwrap());
        assert_eq!(matrix[1][1], fd.d(0).unwrap());

        let one = minor_matrix(&fd, &p(&[1]), &Partition::empty(), 1).unwrap();
        assert_eq!(one[0][0], fd.d(1).unwrap());
    }

    #[test]
    fn minor_matrix_rejects_small_n() {
        let fd = d_coeffs(&SymbolSpec::from_real(&[0.3], &[0.6]), 8);
        assert!(matches!(
            minor_matrix(&fd, &p(&[1, 1]), &Partition::empty(), 1),
            Err(Error::MatrixTooSmall { n: 1, required: 2 })
        ));
    }

    /// Exact expansion over permutations; fine for n <= 6.
    fn naive_det(matrix: &[Vec<Complex64>]) -> Complex64 {
        let n = matrix.len();
        let mut det = c(0.0, 0.0);
        for perm in (0..n).permutations(n) {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = c(if inversions % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
            for (i, &j) in perm.iter().enumerate() {
                term *= matrix[i][j];
            }
            det += term;
        }
        det
    }

    #[test]
    fn lu_det_matches_naive_expansion() {
        let mut state = 0x6a09e667f3bcc909u64;
        let mut next_float = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 2000) as f64 / 1000.0 - 1.0
        };
        for n in 1..=6usize {
            for _ in 0..10 {
                let matrix: Vec<Vec<Complex64>> = (0..n)
                    .map(|_| (0..n).map(|_| c(next_float(), next_float())).collect())
                    .collect();
                let expected = naive_det(&matrix);
                let got = lu_log_det(&matrix).value();
                assert!(
                    (got - expected).norm() <= 1e-10 * expected.norm().max(1.0),
                    "n={} got={} expected={}",
                    n,
                    got,
                    expected
                );
            }
        }
    }

    #[test]
    fn lu_det_flags_singular_matrices() {
        let row = vec![c(1.0, 2.0), c(-0.5, 0.25)];
        let matrix = vec![row.clone(), row];
        assert!(lu_log_det(&matrix).is_zero());
    }

    #[test]
    fn ratio_of_identical_matrices_is_one() {
        let spec = SymbolSpec::from_real(&[0.4, 0.1], &[0.3]);
        let ratios =
            ratio_sequence(&spec, &Partition::empty(), &Partition::empty(), &[1, 4, 16]).unwrap();
        for r in ratios {
            assert_eq!(r, c(1.0, 0.0));
        }
    }

    #[test]
    fn trivial_symbol_minor_ratio_vanishes() {
        let spec = SymbolSpec::from_real(&[], &[]);
        let ratios = ratio_sequence(&spec, &p(&[1]), &Partition::empty(), &[1, 2, 3]).unwrap();
        for r in ratios {
            assert_eq!(r, c(0.0, 0.0));
        }
    }

    #[test]
    fn hermitian_symbol_gives_real_determinants() {
        let values = vec![c(0.4, 0.2), c(-0.1, 0.3)];
        let conjugates: Vec<Complex64> = values.iter().map(|z| z.conj()).collect();
        let spec = SymbolSpec::new(values, conjugates);
        let fd = d_coeffs(&spec, 24);
        for m in 0..=24i64 {
            let dm = fd.d(m).unwrap();
            let dmin = fd.d(-m).unwrap();
            assert!((dmin - dm.conj()).norm() < 1e-12, "m={}", m);
        }
        for n in [2usize, 5, 8] {
            let matrix = minor_matrix(&fd, &Partition::empty(), &Partition::empty(), n).unwrap();
            let det = lu_log_det(&matrix).value();
            assert!(det.im.abs() <= 1e-10 * det.norm(), "n={} det={}", n, det);
        }
    }

    #[test]
    fn ratio_converges_to_exact_value() {
        let spec = SymbolSpec::from_real(&[0.5], &[0.5]);
        let exact = bd_poly(&p(&[1]), &p(&[1])).evaluate(&spec);
        assert!((exact - c(1.25, 0.0)).norm() < 1e-15);
        let ratio = ratio_sequence(&spec, &p(&[1]), &p(&[1]), &[64]).unwrap()[0];
        assert!((ratio - exact).norm() < 1e-8, "ratio={}", ratio);
    }

    #[test]
    fn successive_ratio_gaps_shrink() {
        // Empirical behavior at this scale, not a theoretical guarantee:
        // once the gaps reach rounding noise they may wobble, so the
        // monotonicity assertion floors out at 1e-13.
        let noise_floor = 1e-13;
        let cases = [
            (
                SymbolSpec::from_real(&[0.6, 0.2], &[0.6, 0.2]),
                p(&[2, 1]),
                p(&[1]),
            ),
            (
                SymbolSpec::from_real(&[0.5, 0.0, 0.3], &[0.4]),
                p(&[2]),
                p(&[1, 1]),
            ),
        ];
        for (spec, lam, mu) in cases {
            let r = ratio_sequence(&spec, &lam, &mu, &[16, 32, 64, 128]).unwrap();
            let gaps: Vec<f64> = r.windows(2).map(|w| (w[0] - w[1]).norm()).collect();
            for pair in gaps.windows(2) {
                assert!(
                    pair[1] <= pair[0].max(noise_floor),
                    "gaps must shrink: {:?}",
                    gaps
                );
            }
        }
    }

    #[test]
    fn cross_check_trivial_pair() {
        let spec = SymbolSpec::from_real(&[0.4], &[0.2]);
        let report = cross_check(&spec, &Partition::empty(), &Partition::empty(), 8, 1e-9).unwrap();
        assert_eq!(report.ratio_numeric, c(1.0, 0.0));
        assert_eq!(report.bd_value, c(1.0, 0.0));
        assert_eq!(report.tw_value, c(1.0, 0.0));
        assert!(report.converged);
        assert_eq!(report.max_discrepancy, 0.0);
    }

    #[test]
    fn cross_check_simple_symbol() {
        let spec = SymbolSpec::from_real(&[0.6], &[0.6]);
        let report = cross_check(&spec, &p(&[1]), &p(&[1]), 64, 1e-6).unwrap();
        assert!((report.bd_value - c(1.36, 0.0)).norm() < 1e-12);
        assert!((report.tw_value - c(1.36, 0.0)).norm() < 1e-12);
        assert!(report.converged, "discrepancy {}", report.max_discrepancy);
    }

    #[test]
    fn cross_check_report_serializes_complexes_as_pairs() {
        let spec = SymbolSpec::from_real(&[0.4], &[0.2]);
        let report = cross_check(&spec, &Partition::empty(), &Partition::empty(), 4, 1e-9).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["lambda"], serde_json::json!([]));
        assert_eq!(json["ratio_numeric"], serde_json::json!([1.0, 0.0]));
        assert_eq!(json["converged"], serde_json::json!(true));
        assert_eq!(json["n"], serde_json::json!(4));
    }
}
