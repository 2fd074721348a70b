//! Cyclic Jacobi rotations for dense real symmetric matrices.

#![allow(clippy::needless_range_loop)]

use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;
const REL_TOL: f64 = 1e-12;

pub(crate) struct Eigen {
    pub values: Vec<f64>,
    /// Column `i` is the eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p][q] * a[p][q];
        }
    }
    sum.sqrt()
}

fn frobenius_norm(a: &[Vec<f64>]) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

/// Diagonalizes a symmetric matrix. Stops once the off-diagonal Frobenius norm
/// drops below `1e-12 * (1 + ||A||_F)`.
pub(crate) fn jacobi_eigen(matrix: &[Vec<f64>]) -> Result<Eigen> {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let threshold = REL_TOL * (1.0 + frobenius_norm(&a));

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off < threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i][i]).collect();
    let vectors = (0..n).map(|i| (0..n).map(|k| v[k][i]).collect()).collect();
    Ok(Eigen { values, vectors })
}

/// `max_i |A v_i - λ_i v_i|_∞` over all computed pairs.
pub(crate) fn max_residual(matrix: &[Vec<f64>], eigen: &Eigen) -> f64 {
    let n = matrix.len();
    let mut worst = 0.0f64;
    for (lambda, vec) in eigen.values.iter().zip(&eigen.vectors) {
        for i in 0..n {
            let av: f64 = (0..n).map(|k| matrix[i][k] * vec[k]).sum();
            worst = worst.max((av - lambda * vec[i]).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = jacobi_eigen(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn already_diagonal() {
        let e = jacobi_eigen(&[vec![5.0, 0.0], vec![0.0, -1.0]]).unwrap();
        assert_eq!(e.values, vec![5.0, -1.0]);
    }

    #[test]
    fn symmetric_dense() {
        let m = vec![
            vec![4.0, -2.0, 1.0, 0.5],
            vec![-2.0, 3.0, 0.0, 1.0],
            vec![1.0, 0.0, -1.0, 2.0],
            vec![0.5, 1.0, 2.0, 0.0],
        ];
        let e = jacobi_eigen(&m).unwrap();
        assert!(max_residual(&m, &e) < 1e-12);
        let trace: f64 = e.values.iter().sum();
        assert!((trace - 6.0).abs() < 1e-12);
    }
}
