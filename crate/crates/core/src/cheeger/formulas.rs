use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Lower bound `π / H_N²` on every chamber area of a Cheeger N-cluster.
pub fn chamber_volume_floor(hn: f64) -> Result<f64> {
    if !(hn > 0.0) {
        return Err(Error::Domain(format!("H_N must be positive, got {hn}")));
    }
    Ok(PI / (hn * hn))
}

/// Interface curvatures of a Cheeger cluster.
///
/// Row `j` holds `C_{j,0} = h_j` in column 0 and `C_{j,k}` in column `k`.
pub fn curvature_constants(h: &[f64], areas: &[f64]) -> Result<Vec<Vec<f64>>> {
    let n = h.len();
    if areas.len() != n {
        return Err(Error::Domain(format!("{n} ratios but {} areas", areas.len())));
    }
    if let Some(a) = areas.iter().find(|a| !(**a > 0.0)) {
        return Err(Error::Domain(format!("chamber areas must be positive, got {a}")));
    }
    let mut c = vec![vec![0.0; n + 1]; n];
    for j in 0..n {
        c[j][0] = h[j];
        for k in j + 1..n {
            let v = (areas[k] * h[j] - areas[j] * h[k]) / (areas[j] + areas[k]);
            c[j][k + 1] = v;
            c[k][j + 1] = -v;
        }
    }
    Ok(c)
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::Domain(format!("p must exceed 1, got {p}")));
    }
    Ok(())
}

/// `(h/p)^p`, lower bound for the first p-Laplacian eigenvalue.
pub fn p_eigen_lower(h: f64, p: f64) -> Result<f64> {
    check_p(p)?;
    if !(h > 0.0) {
        return Err(Error::Domain(format!("h must be positive, got {h}")));
    }
    Ok((h / p).powf(p))
}

/// `(H_N/p)^p / N^{p-1}`, lower bound for the p-Laplacian partition value.
pub fn p_partition_lower(hn: f64, p: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    Ok(p_eigen_lower(hn, p)? / (n as f64).powf(p - 1.0))
}
