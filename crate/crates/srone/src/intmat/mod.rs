//! Exact integer-matrix stable range toolkit.
//!
//! Matrices over the integers live outside the finite-ring machinery: the
//! ring is infinite, so nothing here scans. Instead the determinant decides
//! everything (an n×n integer matrix has stable range one exactly when its
//! determinant is 0 or ±1), Smith normal form supplies the transport data,
//! and the witness pipeline mirrors the constructive finite-ring chain:
//! diagonalize, split off a zero diagonal entry, suspend into the
//! complementary corner, and reassemble. Every arithmetic step is
//! arbitrary-precision; nothing silently overflows.

mod rules;
mod snf;
mod witness;

pub use rules::{
    audit_6_12, bezout_matrix, complete_row, random_idempotent_2x2, random_matrix,
    random_unimodular, schur_reduce_int, structural_rules, variant_refute, AuditSide,
    BezoutFactorization, IntSchurReduction, OrientationAudit, VariantRefutation,
};
pub use snf::{snf, SnfResult};
pub use witness::{int_witness, sr1_int, RefutationCertificate, SrVerdict};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntError {
    /// The matrix file or literal could not be read.
    Parse(String),
    /// int_witness was called on a matrix whose determinant rules it out.
    NotStableRangeOne { det: String },
    /// Two matrices that must share a dimension do not.
    DimensionMismatch { left: usize, right: usize },
    /// An operation needed a specific block shape and did not get it.
    BlockShape(String),
}

impl fmt::Display for IntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntError::Parse(msg) => write!(f, "matrix parse error: {msg}"),
            IntError::NotStableRangeOne { det } => {
                write!(f, "matrix has determinant {det}, so it does not have stable range one")
            }
            IntError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            IntError::BlockShape(msg) => write!(f, "block shape violation: {msg}"),
        }
    }
}

impl std::error::Error for IntError {}

/// A square integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> IntMatrix {
        assert!(n >= 1, "matrices are at least 1x1");
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn diagonal(values: &[i64]) -> IntMatrix {
        let mut m = IntMatrix::zero(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, BigInt::from(v));
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> IntMatrix {
        let n = rows.len();
        let mut m = IntMatrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has the wrong length");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    /// The matrix unit with a single `value` at `(i, j)`, zero-indexed.
    pub fn unit_entry(n: usize, i: usize, j: usize, value: i64) -> IntMatrix {
        let mut m = IntMatrix::zero(n);
        m.set(i, j, BigInt::from(value));
        m
    }

    /// The permutation matrix swapping coordinates `i` and `j`.
    pub fn swap_matrix(n: usize, i: usize, j: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(n);
        if i != j {
            m.set(i, i, BigInt::zero());
            m.set(j, j, BigInt::zero());
            m.set(i, j, BigInt::one());
            m.set(j, i, BigInt::one());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &IntMatrix, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * rhs.get(k, j);
                    let cur = out.get(i, j) + prod;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|a| a.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Upper-left `k×k` block as its own matrix.
    pub fn leading_block(&self, k: usize) -> IntMatrix {
        assert!(k >= 1 && k <= self.n);
        let mut out = IntMatrix::zero(k);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// Embed a `k×k` matrix into the upper-left corner of an `n×n` zero
    /// matrix.
    pub fn embed_leading(&self, n: usize) -> IntMatrix {
        assert!(self.n <= n);
        let mut out = IntMatrix::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact determinant by fraction-free elimination: every intermediate
    /// division is exact, so the result is correct at any magnitude.
    pub fn det_exact(&self) -> BigInt {
        let n = self.n;
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(r, j).clone();
                            m.set(k, j, b);
                            m.set(r, j, a);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, num / &prev);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    /// Read the matrix file format: `{"n": int, "rows": [[entry, …], …]}`
    /// with entries as decimal strings (plain JSON integers are accepted
    /// too).
    pub fn from_json_value(value: &serde_json::Value) -> Result<IntMatrix, IntError> {
        let obj = value
            .as_object()
            .ok_or_else(|| IntError::Parse("expected a JSON object".into()))?;
        let n = obj
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| IntError::Parse("missing or non-integer field `n`".into()))?
            as usize;
        if n == 0 {
            return Err(IntError::Parse("`n` must be at least 1".into()));
        }
        let rows = obj
            .get("rows")
            .and_then(|v| v.as_array())
            .ok_or_else(|| IntError::Parse("missing array field `rows`".into()))?;
        if rows.len() != n {
            return Err(IntError::Parse(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        let mut m = IntMatrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| IntError::Parse(format!("row {i} is not an array")))?;
            if row.len() != n {
                return Err(IntError::Parse(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, cell) in row.iter().enumerate() {
                let value = match cell {
                    serde_json::Value::String(s) => BigInt::from_str(s.trim()).map_err(|e| {
                        IntError::Parse(format!("entry ({i},{j}) `{s}`: {e}"))
                    })?,
                    serde_json::Value::Number(num) => {
                        BigInt::from_str(&num.to_string()).map_err(|e| {
                            IntError::Parse(format!("entry ({i},{j}) `{num}`: {e}"))
                        })?
                    }
                    other => {
                        return Err(IntError::Parse(format!(
                            "entry ({i},{j}) must be a decimal string, found {other}"
                        )))
                    }
                };
                m.set(i, j, value);
            }
        }
        Ok(m)
    }

    pub fn from_json_str(text: &str) -> Result<IntMatrix, IntError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| IntError::Parse(e.to_string()))?;
        IntMatrix::from_json_value(&value)
    }

    /// Emit the matrix file format with decimal-string entries.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        serde_json::json!({ "n": self.n, "rows": rows })
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("n", &self.n)?;
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        map.serialize_entry("rows", &rows)?;
        map.end()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({self})")
    }
}

/// |det| helper used by the decision procedures.
pub(crate) fn abs_det(m: &IntMatrix) -> BigInt {
    m.det_exact().abs()
}

/// Serialize a big integer as a decimal string, matching the file format.
pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn serialize_bigint_vec<S: Serializer>(
    v: &[BigInt],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn determinants_of_small_matrices_are_exact() {
        assert_eq!(IntMatrix::identity(4).det_exact(), BigInt::from(1));
        assert_eq!(IntMatrix::diagonal(&[7, 0]).det_exact(), BigInt::from(0));
        assert_eq!(
            IntMatrix::from_rows(&[&[0, -1], &[2, 0]]).det_exact(),
            BigInt::from(2)
        );
        assert_eq!(
            IntMatrix::from_rows(&[&[2, 3, 1], &[4, 7, 5], &[1, 2, 6]]).det_exact(),
            BigInt::from(8),
        );
        assert_eq!(
            IntMatrix::from_rows(&[&[2, 3, 1], &[4, 7, 5], &[0, 2, 6]]).det_exact(),
            BigInt::from(0),
            "singular despite no visible zero pattern"
        );
    }

    #[test]
    fn determinant_matches_cofactor_expansion_on_random_matrices() {
        fn cofactor_det(m: &IntMatrix) -> BigInt {
            let n = m.n();
            if n == 1 {
                return m.get(0, 0).clone();
            }
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m.get(0, j).is_zero() {
                    continue;
                }
                let mut minor = IntMatrix::zero(n - 1);
                for i in 1..n {
                    let mut jj = 0;
                    for k in 0..n {
                        if k == j {
                            continue;
                        }
                        minor.set(i - 1, jj, m.get(i, k).clone());
                        jj += 1;
                    }
                }
                let term = m.get(0, j) * cofactor_det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=4);
            let m = random_matrix(&mut rng, n, 9);
            assert_eq!(m.det_exact(), cofactor_det(&m), "{m}");
        }
    }

    #[test]
    fn block_determinant_identity_for_the_four_by_four_example() {
        // Blocks 1, E12 over E11, 2E21 flattened to 4x4.
        let m = IntMatrix::from_rows(&[
            &[1, 0, 0, 1],
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 2, 0],
        ]);
        assert_eq!(m.det_exact(), BigInt::from(2));
    }

    #[test]
    fn determinant_survives_huge_entries() {
        // 2x2 with 40-digit entries: det = a*d - b*c recomputed directly.
        let big = BigInt::from_str("1234567890123456789012345678901234567890").unwrap();
        let mut m = IntMatrix::identity(2);
        m.set(0, 0, big.clone());
        m.set(0, 1, &big - 1);
        m.set(1, 0, &big + 1);
        m.set(1, 1, big.clone());
        let expected = &big * &big - (&big - 1) * (&big + 1);
        assert_eq!(m.det_exact(), expected);
        assert_eq!(expected, BigInt::one());
    }

    #[test]
    fn matrix_json_round_trips() {
        let m = IntMatrix::from_rows(&[&[7, 0], &[-3, 12]]);
        let json = m.to_json();
        assert_eq!(
            json,
            serde_json::json!({"n": 2, "rows": [["7", "0"], ["-3", "12"]]})
        );
        let back = IntMatrix::from_json_value(&json).unwrap();
        assert_eq!(back, m);

        let liberal = IntMatrix::from_json_str(r#"{"n": 2, "rows": [[7, 0], [-3, 12]]}"#).unwrap();
        assert_eq!(liberal, m);

        let huge = r#"{"n": 1, "rows": [["123456789012345678901234567890"]]}"#;
        let parsed = IntMatrix::from_json_str(huge).unwrap();
        assert_eq!(
            parsed.get(0, 0),
            &BigInt::from_str("123456789012345678901234567890").unwrap()
        );
    }

    #[test]
    fn matrix_json_rejects_malformed_input() {
        for bad in [
            r#"{"rows": [["1"]]}"#,
            r#"{"n": 2, "rows": [["1", "2"]]}"#,
            r#"{"n": 1, "rows": [["x"]]}"#,
            r#"{"n": 0, "rows": []}"#,
            r#"[1, 2]"#,
        ] {
            assert!(IntMatrix::from_json_str(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic_identities_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let a = random_matrix(&mut rng, 3, 9);
            let b = random_matrix(&mut rng, 3, 9);
            let c = random_matrix(&mut rng, 3, 9);
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
            assert_eq!(a.sub(&a), IntMatrix::zero(3));
            assert_eq!(
                a.mul(&b).det_exact(),
                a.det_exact() * b.det_exact(),
                "multiplicativity"
            );
        }
    }

    #[test]
    fn circle_determinant_identity_on_random_integer_triples() {
        // det(A + B - AXB) = det(A + B - BXA), checked exactly.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for trial in 0..10_000 {
            let n = if trial % 2 == 0 { 2 } else { 3 };
            let a = random_matrix(&mut rng, n, 9);
            let b = random_matrix(&mut rng, n, 9);
            let x = random_matrix(&mut rng, n, 9);
            let sum = a.add(&b);
            let right = sum.sub(&a.mul(&x).mul(&b));
            let left = sum.sub(&b.mul(&x).mul(&a));
            assert_eq!(right.det_exact(), left.det_exact(), "trial {trial}");
        }
    }
}
