//! Test-only oracles, independent of the library's construction path.
#![allow(dead_code)]

use hawking_distill::{DensityMatrix, HermitianMatrix};
use num_complex::Complex64;
use rand::Rng;

/// Closed-form matrices, written out entry by entry, with `e^{±ω/T}` written out.
pub mod closed_form {
    fn em(ratio: f64) -> f64 {
        (-ratio).exp() + 1.0
    }

    fn ep(ratio: f64) -> f64 {
        ratio.exp() + 1.0
    }

    /// 8×8 state of (Alice, region I, region II), maximal Bell states.
    pub fn joint_maximal(f: f64, ratio: f64) -> [[f64; 8]; 8] {
        let (em, ep) = (em(ratio), ep(ratio));
        let mut m = [[0.0; 8]; 8];
        m[0][0] = (1.0 - f) / (3.0 * em);
        m[0][3] = (1.0 - f) * em.powf(-0.5) / (3.0 * ep.sqrt());
        m[2][2] = (2.0 * f + 1.0) / 6.0;
        m[2][4] = (1.0 - 4.0 * f) / (6.0 * em.sqrt());
        m[2][7] = (1.0 - 4.0 * f) / (6.0 * ep.sqrt());
        m[3][0] = m[0][3];
        m[3][3] = (1.0 - f) / (3.0 * ep);
        m[4][2] = m[2][4];
        m[4][4] = (1.0 + 2.0 * f) / (6.0 * em);
        m[4][7] = (1.0 + 2.0 * f) * em.powf(-0.5) / (6.0 * ep.sqrt());
        m[6][6] = (1.0 - f) / 3.0;
        m[7][2] = m[2][7];
        m[7][4] = m[4][7];
        m[7][7] = (1.0 + 2.0 * f) / (6.0 * ep);
        m
    }

    /// 4×4 state of (Alice, region I), maximal Bell states.
    pub fn traced_maximal(f: f64, ratio: f64) -> [[f64; 4]; 4] {
        let (em, ep) = (em(ratio), ep(ratio));
        let mut m = [[0.0; 4]; 4];
        m[0][0] = (1.0 - f) / (3.0 * em);
        m[1][1] = (1.0 + 2.0 * f) / 6.0 + (1.0 - f) / (3.0 * ep);
        m[1][2] = (1.0 - 4.0 * f) / (6.0 * em.sqrt());
        m[2][1] = m[1][2];
        m[2][2] = (1.0 + 2.0 * f) / (6.0 * em);
        m[3][3] = (1.0 - f) / 3.0 + (1.0 + 2.0 * f) / (6.0 * ep);
        m
    }

    /// 8×8 state of (Alice, region I, region II), generic `α`.
    pub fn joint_generic(f: f64, alpha: f64, ratio: f64) -> [[f64; 8]; 8] {
        let (em, ep) = (em(ratio), ep(ratio));
        let a2 = alpha * alpha;
        let ab = alpha * (1.0 - a2).sqrt();
        let big_a = em.powf(-0.5) / ep.sqrt();
        let mut m = [[0.0; 8]; 8];
        m[0][0] = 2.0 * a2 * (1.0 - f) / (3.0 * em);
        m[0][3] = 2.0 * a2 * (1.0 - f) * big_a / 3.0;
        m[2][2] = a2 * (2.0 * f + 1.0) / 3.0;
        m[2][4] = ab * (1.0 - 4.0 * f) / (3.0 * em.sqrt());
        m[2][7] = ab * (1.0 - 4.0 * f) / (3.0 * ep.sqrt());
        m[3][0] = m[0][3];
        m[3][3] = a2 * (2.0 - 2.0 * f) / (3.0 * ep);
        m[4][2] = m[2][4];
        m[4][4] = (1.0 - a2) * (1.0 + 2.0 * f) / (3.0 * em);
        m[4][7] = (1.0 - a2) * (1.0 + 2.0 * f) * big_a / 3.0;
        m[6][6] = 2.0 * (1.0 - a2) * (1.0 - f) / 3.0;
        m[7][2] = m[2][7];
        m[7][4] = m[4][7];
        m[7][7] = (1.0 - a2) * (1.0 + 2.0 * f) / (3.0 * ep);
        m
    }

    /// 4×4 state of (Alice, region I), generic `α`.
    pub fn traced_generic(f: f64, alpha: f64, ratio: f64) -> [[f64; 4]; 4] {
        let (em, ep) = (em(ratio), ep(ratio));
        let a2 = alpha * alpha;
        let ab = alpha * (1.0 - a2).sqrt();
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 2.0 * a2 * (1.0 - f) / (3.0 * em);
        m[1][1] = (1.0 + 2.0 * f) * a2 / 3.0 + 2.0 * a2 * (1.0 - f) / (3.0 * ep);
        m[1][2] = ab * (1.0 - 4.0 * f) / (3.0 * em.sqrt());
        m[2][1] = m[1][2];
        m[2][2] = (1.0 - a2) * (1.0 + 2.0 * f) / (3.0 * em);
        m[3][3] = 2.0 * (1.0 - a2) * (1.0 - f) / 3.0 + (1.0 - a2) * (1.0 + 2.0 * f) / (3.0 * ep);
        m
    }
}

/// Largest `|m[i][j] − expected[i][j]|`, imaginary parts included.
pub fn max_entry_diff<const N: usize>(m: &DensityMatrix, expected: &[[f64; N]; N]) -> f64 {
    assert_eq!(m.dim(), N);
    let mut worst = 0.0_f64;
    for (i, row) in expected.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            worst = worst.max((m.get(i, j) - Complex64::new(want, 0.0)).norm());
        }
    }
    worst
}

/// `G G† / tr(G G†)` for a random complex `G`.
pub fn random_density_matrix<R: Rng>(rng: &mut R, dims: Vec<usize>) -> DensityMatrix {
    let n: usize = dims.iter().product();
    let g: Vec<Complex64> = (0..n * n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    DensityMatrix::from_hermitian(gram(&dims, &g)).expect("Gram matrices are valid states")
}

/// Random Hermitian matrix with entries in the unit box.
pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> HermitianMatrix {
    let mut data = vec![Complex64::default(); n * n];
    for i in 0..n {
        data[i * n + i] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            data[i * n + j] = z;
            data[j * n + i] = z.conj();
        }
    }
    HermitianMatrix::new(vec![n], data).unwrap()
}

fn gram(dims: &[usize], g: &[Complex64]) -> HermitianMatrix {
    let n: usize = dims.iter().product();
    let mut data = vec![Complex64::default(); n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = (0..n).map(|k| g[i * n + k] * g[j * n + k].conj()).sum();
        }
    }
    let trace: f64 = (0..n).map(|i| data[i * n + i].re).sum();
    for z in &mut data {
        *z /= trace;
    }
    // Force exact Hermiticity of the rounded product.
    for i in 0..n {
        data[i * n + i].im = 0.0;
        for j in i + 1..n {
            data[j * n + i] = data[i * n + j].conj();
        }
    }
    HermitianMatrix::new(dims.to_vec(), data).unwrap()
}

pub fn sorted(mut v: [f64; 4]) -> [f64; 4] {
    v.sort_by(f64::total_cmp);
    v
}

pub fn max_sorted_diff(a: [f64; 4], b: [f64; 4]) -> f64 {
    sorted(a)
        .iter()
        .zip(sorted(b))
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
