//! Smith normal form with accumulated transforms.
//!
//! Deterministic pivoting: the smallest nonzero |entry| of the working
//! submatrix wins, ties broken row-major. Row and column operations are
//! mirrored into U and V and, op by op, into their inverses, so callers
//! get exact unimodular transforms without ever inverting a matrix.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U·A·V = D` with `D = diag(d₁, …)`, `d₁ | d₂ | …`, zeros trailing,
/// entries nonnegative; `U`, `V` unimodular with exact inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

struct Workspace {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Workspace {
    fn new(a: &IntMatrix) -> Workspace {
        let n = a.n();
        Workspace {
            d: a.clone(),
            u: IntMatrix::identity(n),
            u_inv: IntMatrix::identity(n),
            v: IntMatrix::identity(n),
            v_inv: IntMatrix::identity(n),
        }
    }

    fn n(&self) -> usize {
        self.d.n()
    }

    /// D ← P·D with P the (i j) swap; U ← P·U, U⁻¹ ← U⁻¹·P.
    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            for col in 0..m.n() {
                let a = m.get(i, col).clone();
                let b = m.get(j, col).clone();
                m.set(i, col, b);
                m.set(j, col, a);
            }
        }
        let m = &mut self.u_inv;
        for row in 0..m.n() {
            let a = m.get(row, i).clone();
            let b = m.get(row, j).clone();
            m.set(row, i, b);
            m.set(row, j, a);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for row in 0..m.n() {
                let a = m.get(row, i).clone();
                let b = m.get(row, j).clone();
                m.set(row, i, b);
                m.set(row, j, a);
            }
        }
        let m = &mut self.v_inv;
        for col in 0..m.n() {
            let a = m.get(i, col).clone();
            let b = m.get(j, col).clone();
            m.set(i, col, b);
            m.set(j, col, a);
        }
    }

    /// row_i ← row_i + c·row_j on D and U; U⁻¹ gets col_j ← col_j − c·col_i.
    fn row_add(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            for col in 0..m.n() {
                let add = c * m.get(j, col);
                let value = m.get(i, col) + add;
                m.set(i, col, value);
            }
        }
        let m = &mut self.u_inv;
        for row in 0..m.n() {
            let sub = c * m.get(row, i);
            let value = m.get(row, j) - sub;
            m.set(row, j, value);
        }
    }

    /// col_j ← col_j + c·col_i on D and V; V⁻¹ gets row_i ← row_i − c·row_j.
    fn col_add(&mut self, j: usize, i: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for row in 0..m.n() {
                let add = c * m.get(row, i);
                let value = m.get(row, j) + add;
                m.set(row, j, value);
            }
        }
        let m = &mut self.v_inv;
        for col in 0..m.n() {
            let sub = c * m.get(j, col);
            let value = m.get(i, col) - sub;
            m.set(i, col, value);
        }
    }

    fn row_negate(&mut self, i: usize) {
        for m in [&mut self.d, &mut self.u] {
            for col in 0..m.n() {
                let value = -m.get(i, col);
                m.set(i, col, value);
            }
        }
        let m = &mut self.u_inv;
        for row in 0..m.n() {
            let value = -m.get(row, i);
            m.set(row, i, value);
        }
    }

    /// Smallest nonzero |entry| of the submatrix at `(k.., k..)`, ties
    /// row-major.
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in k..self.n() {
            for j in k..self.n() {
                let value = self.d.get(i, j);
                if value.is_zero() {
                    continue;
                }
                let mag = value.abs();
                match &best {
                    Some((m, _, _)) if *m <= mag => {}
                    _ => best = Some((mag, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Diagonalize `A` as `U·A·V = D`. The result is re-verified by
/// multiplication before it is returned; the divisibility chain, the sign
/// normalization, and the trailing zeros are asserted rather than assumed.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let n = a.n();
    let mut w = Workspace::new(a);
    for k in 0..n {
        'pivot: loop {
            let Some((pi, pj)) = w.pivot(k) else {
                break 'pivot;
            };
            w.row_swap(k, pi);
            w.col_swap(k, pj);
            if w.d.get(k, k).is_negative() {
                w.row_negate(k);
            }
            let mut dirty = false;
            for i in k + 1..n {
                let q = w.d.get(i, k) / w.d.get(k, k);
                w.row_add(i, k, &-q);
                if !w.d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..n {
                let q = w.d.get(k, j) / w.d.get(k, k);
                w.col_add(j, k, &-q);
                if !w.d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // The pivot now owns its row and column; pull in any entry it
            // does not divide and keep reducing.
            for i in k + 1..n {
                for j in k + 1..n {
                    if !(w.d.get(i, j) % w.d.get(k, k)).is_zero() {
                        w.row_add(k, i, &BigInt::from(1));
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }

    let result = SnfResult {
        u: w.u,
        d: w.d,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    };
    let id = IntMatrix::identity(n);
    assert_eq!(result.u.mul(a).mul(&result.v), result.d, "UAV = D");
    assert_eq!(result.u.mul(&result.u_inv), id, "U·U⁻¹ = I");
    assert_eq!(result.u_inv.mul(&result.u), id, "U⁻¹·U = I");
    assert_eq!(result.v.mul(&result.v_inv), id, "V·V⁻¹ = I");
    assert_eq!(result.v_inv.mul(&result.v), id, "V⁻¹·V = I");
    assert!(result.d.is_diagonal(), "D diagonal");
    let diag: Vec<&BigInt> = (0..n).map(|i| result.d.get(i, i)).collect();
    for pair in diag.windows(2) {
        assert!(
            !pair[0].is_zero() || pair[1].is_zero(),
            "zeros must trail: {:?}",
            diag
        );
        if !pair[0].is_zero() {
            assert!(
                (pair[1].clone() % pair[0].clone()).is_zero(),
                "divisibility chain: {:?}",
                diag
            );
        }
    }
    assert!(diag.iter().all(|d| !d.is_negative()), "nonnegative diagonal");
    result
}

#[cfg(test)]
mod tests {
    use super::super::{random_matrix, random_unimodular};
    use super::*;
    use num_traits::One;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn already_diagonal_matrices_pass_through() {
        let a = IntMatrix::diagonal(&[2, 0]);
        let r = snf(&a);
        assert_eq!(r.d, a);
    }

    #[test]
    fn gcd_elimination_reorders_and_reduces() {
        let a = IntMatrix::from_rows(&[&[0, -1], &[2, 0]]);
        let r = snf(&a);
        assert_eq!(r.d, IntMatrix::diagonal(&[1, 2]));
    }

    #[test]
    fn unimodular_matrices_reduce_to_the_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let n = rng.gen_range(1..=4);
            let (w, _) = random_unimodular(&mut rng, n, 12);
            let r = snf(&w);
            assert_eq!(r.d, IntMatrix::identity(n), "{w}");
        }
    }

    #[test]
    fn random_matrices_satisfy_all_snf_invariants() {
        // snf() itself asserts UAV = D, the inverses, the chain, and the
        // signs; this drives it across shapes, including singular ones.
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for trial in 0..200 {
            let n = rng.gen_range(1..=4);
            let mut a = random_matrix(&mut rng, n, 9);
            if trial % 3 == 0 && n >= 2 {
                // Force rank deficiency: duplicate a row.
                for j in 0..n {
                    a.set(n - 1, j, a.get(0, j).clone());
                }
            }
            let r = snf(&a);
            let det_d = r.d.det_exact().abs();
            assert_eq!(det_d, a.det_exact().abs(), "|det| preserved: {a}");
        }
    }

    #[test]
    fn zero_and_scalar_matrices_are_fixed_points() {
        let z = IntMatrix::zero(3);
        assert_eq!(snf(&z).d, z);
        let two = IntMatrix::diagonal(&[2, 2, 2]);
        assert_eq!(snf(&two).d, two);
        let one = IntMatrix::identity(1);
        assert_eq!(snf(&one).d, one);
        assert_eq!(snf(&IntMatrix::diagonal(&[-5])).d, IntMatrix::diagonal(&[5]));
    }

    #[test]
    fn divisibility_chain_is_genuine() {
        let a = IntMatrix::diagonal(&[4, 6]);
        let r = snf(&a);
        assert_eq!(r.d, IntMatrix::diagonal(&[2, 12]), "gcd 2, lcm 12");
        assert!((r.d.get(1, 1) % r.d.get(0, 0)).is_zero());
        assert!(r.u.det_exact().abs().is_one());
        assert!(r.v.det_exact().abs().is_one());
    }
}
