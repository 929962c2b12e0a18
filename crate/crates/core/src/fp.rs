//! Frobenius-Perron dimensions via power iteration.
//!
//! For a fusion ring the matrix of left multiplication by the sum of all
//! basics is strictly positive, so it has a unique positive eigenvector.
//! Normalized to 1 at the unit, that vector lists the Frobenius-Perron
//! dimensions of the basics, and each basic's left-multiplication matrix
//! acts on it by its own dimension.

use crate::error::Error;
use crate::ring::FusionRing;

/// Tolerance and iteration budget for eigenvector computations.
#[derive(Debug, Clone, Copy)]
pub struct FpOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for FpOptions {
    fn default() -> Self {
        FpOptions {
            tolerance: 1e-9,
            max_iterations: 100_000,
        }
    }
}

impl FpOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        FpOptions {
            tolerance,
            ..Default::default()
        }
    }

    fn check(&self) -> Result<(), Error> {
        if !(self.tolerance > 0.0) {
            return Err(Error::precondition("tolerance must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(Error::precondition("max_iterations must be positive"));
        }
        Ok(())
    }
}

/// Frobenius-Perron dimensions of a ring's basics.
#[derive(Debug, Clone)]
pub struct FpData {
    /// Dimension of each basic element; entry 0 is exactly 1.
    pub dims: Vec<f64>,
    /// Sum of the squared dimensions.
    pub ring_dim: f64,
    pub tolerance: f64,
    /// Per basic: dimension within `tolerance` of an integer.
    pub integer_flags: Vec<bool>,
    /// Per basic: squared dimension within `tolerance` of an integer.
    pub sq_integer_flags: Vec<bool>,
}

impl FpData {
    pub fn ring_dim_is_integer(&self) -> bool {
        near_integer(self.ring_dim, self.tolerance)
    }

    /// When every squared dimension rounds to an integer, their rounded
    /// sum must reproduce the rounded ring dimension. Catches tolerance
    /// settings loose enough to flag non-integers.
    pub fn exactness_cross_check(&self) -> bool {
        if !self.sq_integer_flags.iter().all(|&f| f) {
            return true;
        }
        let sum: i64 = self
            .dims
            .iter()
            .map(|d| (d * d).round() as i64)
            .sum();
        sum == self.ring_dim.round() as i64
    }
}

pub(crate) fn near_integer(x: f64, tolerance: f64) -> bool {
    (x - x.round()).abs() < tolerance
}

/// Compute the Frobenius-Perron dimensions of a validated ring.
///
/// One power iteration on the strictly positive total left-multiplication
/// matrix yields the common eigenvector; per-basic dimensions are then
/// read off as Rayleigh ratios at the largest component (ties broken by
/// lowest index, for determinism).
pub fn fp_dimensions(ring: &FusionRing, opts: &FpOptions) -> Result<FpData, Error> {
    opts.check()?;
    let r = ring.rank();
    let mut total = vec![vec![0.0f64; r]; r];
    for ((_, j, k), v) in ring.entries() {
        total[k][j] += v as f64;
    }
    let v = perron_vector(&total, opts)?;

    let mut jmax = 0;
    for j in 1..r {
        if v[j] > v[jmax] {
            jmax = j;
        }
    }

    let mut dims = vec![0.0f64; r];
    for i in 0..r {
        let mut num = 0.0;
        for j in 0..r {
            let c = ring.coeff(i, j, jmax);
            if c > 0 {
                num += c as f64 * v[j];
            }
        }
        dims[i] = num / v[jmax];
    }
    debug_assert!((dims[0] - 1.0).abs() < 1e-12);
    dims[0] = 1.0;

    let ring_dim = dims.iter().map(|d| d * d).sum();
    let integer_flags = dims.iter().map(|&d| near_integer(d, opts.tolerance)).collect();
    let sq_integer_flags = dims
        .iter()
        .map(|&d| near_integer(d * d, opts.tolerance))
        .collect();
    Ok(FpData {
        dims,
        ring_dim,
        tolerance: opts.tolerance,
        integer_flags,
        sq_integer_flags,
    })
}

/// Power iteration for the Perron eigenvector of a strictly positive
/// matrix. Returns the eigenvector scaled to max component 1.
pub(crate) fn perron_vector(matrix: &[Vec<f64>], opts: &FpOptions) -> Result<Vec<f64>, Error> {
    opts.check()?;
    let n = matrix.len();
    if n == 1 {
        return Ok(vec![1.0]);
    }
    // Converge the vector well below the requested tolerance so that
    // quantities derived from it (ratios, squared sums) stay within it.
    let target = opts.tolerance * 1e-3;
    let mut v = vec![1.0f64; n];
    for iteration in 0..opts.max_iterations {
        let mut w = vec![0.0f64; n];
        for k in 0..n {
            let row = &matrix[k];
            let mut acc = 0.0;
            for j in 0..n {
                acc += row[j] * v[j];
            }
            w[k] = acc;
        }
        let scale = w.iter().cloned().fold(f64::MIN, f64::max);
        if !(scale > 0.0) {
            return Err(Error::precondition(
                "matrix is not positive; power iteration cannot proceed",
            ));
        }
        for x in &mut w {
            *x /= scale;
        }
        let delta = w
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        v = w;
        if delta < target {
            return Ok(v);
        }
        let _ = iteration;
    }
    let residual = residual_norm(matrix, &v);
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        residual,
    })
}

fn residual_norm(matrix: &[Vec<f64>], v: &[f64]) -> f64 {
    let n = matrix.len();
    let mut av = vec![0.0f64; n];
    for k in 0..n {
        for j in 0..n {
            av[k] += matrix[k][j] * v[j];
        }
    }
    let lambda: f64 = av.iter().zip(v).map(|(a, b)| a * b).sum::<f64>()
        / v.iter().map(|x| x * x).sum::<f64>();
    av.iter()
        .zip(v)
        .map(|(a, b)| (a - lambda * b).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_ring_dimensions_are_all_one() {
        let ring = catalog::build("z4").unwrap().ring;
        let fp = fp_dimensions(&ring, &FpOptions::default()).unwrap();
        for d in &fp.dims {
            assert!((d - 1.0).abs() < 1e-9);
        }
        assert!((fp.ring_dim - 4.0).abs() < 1e-9);
        assert!(fp.integer_flags.iter().all(|&f| f));
    }

    #[test]
    fn ising_dimensions() {
        let ring = catalog::build("ising").unwrap().ring;
        let fp = fp_dimensions(&ring, &FpOptions::default()).unwrap();
        assert!((fp.dims[0] - 1.0).abs() < 1e-9);
        assert!((fp.dims[1] - 1.0).abs() < 1e-9);
        assert!((fp.dims[2] - 2f64.sqrt()).abs() < 1e-9);
        assert!((fp.ring_dim - 4.0).abs() < 1e-9);
        assert!(!fp.integer_flags[2]);
        assert!(fp.sq_integer_flags[2]);
        assert!(fp.exactness_cross_check());
    }

    #[test]
    fn fibonacci_dimension_is_the_golden_ratio() {
        let ring = catalog::build("fibonacci").unwrap().ring;
        let fp = fp_dimensions(&ring, &FpOptions::default()).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((fp.dims[1] - phi).abs() < 1e-9);
        assert!((fp.ring_dim - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        assert!(!fp.sq_integer_flags[1]);
        assert!(!fp.ring_dim_is_integer());
    }

    #[test]
    fn homomorphism_residual_is_small() {
        let ring = catalog::build("ty_z3").unwrap().ring;
        let opts = FpOptions::default();
        let fp = fp_dimensions(&ring, &opts).unwrap();
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let lhs = fp.dims[i] * fp.dims[j];
                let rhs: f64 = (0..ring.rank())
                    .map(|k| ring.coeff(i, j, k) as f64 * fp.dims[k])
                    .sum();
                assert!((lhs - rhs).abs() < 10.0 * opts.tolerance);
            }
        }
    }

    #[test]
    fn integer_dimension_two_is_flagged() {
        let ring = catalog::build("ty_z2xz2").unwrap().ring;
        let fp = fp_dimensions(&ring, &FpOptions::default()).unwrap();
        assert!((fp.dims[4] - 2.0).abs() < 1e-9);
        assert!(fp.integer_flags[4]);
    }

    #[test]
    fn bad_options_are_rejected() {
        let ring = catalog::build("z2").unwrap().ring;
        let opts = FpOptions {
            tolerance: 0.0,
            max_iterations: 10,
        };
        assert!(fp_dimensions(&ring, &opts).is_err());
    }
}
