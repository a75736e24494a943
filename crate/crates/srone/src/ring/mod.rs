//! Finite rings with explicit carriers.
//!
//! A [`Ring`] is a finite carrier `{0, 1, …, order−1}` of [`ElementId`]s together
//! with total `add`/`mul`/`neg` evaluators, a zero and a one. Rings are built
//! from a small spec grammar,
//!
//! ```text
//! spec := "Z/" n
//!       | "M(" k "," spec ")"          square matrices
//!       | "T(" k "," spec ")"          upper-triangular matrices
//!       | spec " x " spec              direct product
//!       | "corner(" spec "," literal ")"   Peirce corner eRe at an idempotent e
//!       | "op(" spec ")"               opposite ring
//!       | "quot(" spec "," literal-list ")"   quotient by a two-sided ideal
//! ```
//!
//! and validated against the ring axioms at construction: exhaustively for
//! order ≤ 4096, by 10⁵ uniformly sampled triples above that. Every ring is
//! immutable after construction and shared behind [`std::sync::Arc`], so all
//! queries are safe to fan out across threads.
//!
//! Element ids are canonical mixed-radix indices. For `M(k,B)` and `T(k,B)` the
//! free entries are read row-major with the first entry most significant and
//! the base ring's order as radix; a product pairs `(l, r)` as `l·|R| + r`.
//! So `[[1,0],[0,0]]` in `M(2,Z/2)` is index `1·2³ = 8`, and `(1,2)` in
//! `Z/2 x Z/3` is index `1·3 + 2 = 5`.
//!
//! ```
//! use srone::ring::Ring;
//!
//! let r = Ring::parse_spec("M(2,Z/2)").unwrap();
//! assert_eq!(r.order(), 16);
//! let a = r.parse_element("[[1,0],[0,0]]").unwrap();
//! assert_eq!(a, 8);
//! assert_eq!(r.units().units.len(), 6);
//! ```

mod literal;
mod parse;

pub use literal::{parse_literal, ElementError, Literal};
pub use parse::{parse_spec, SpecError};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Canonical index of an element in a ring's carrier: an integer in `[0, order)`.
pub type ElementId = usize;

/// Largest order for which flat operation tables are stored and axiom checks
/// run exhaustively. Above this, operations evaluate structurally and axioms
/// are sampled.
pub const TABLE_LIMIT: usize = 4096;

/// Hard cap on constructible carrier size.
pub const MAX_ORDER: usize = 1 << 24;

/// Number of sampled triples used for axiom checks above [`TABLE_LIMIT`].
const SAMPLED_TRIPLES: usize = 100_000;

/// Errors from ring construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// A ring axiom failed on the witness triple; indicates a construction bug.
    AxiomFailed { law: &'static str, witness: String },
    /// Corner construction at an element that is not idempotent.
    NotIdempotent { element: String },
    /// Quotient whose ideal contains 1; the zero quotient is rejected.
    ZeroQuotient,
    /// Carrier would exceed [`MAX_ORDER`], or an operation needs a table that
    /// the ring is too big to hold.
    TooLarge { detail: String },
    /// Involution table violates one of the star laws.
    InvolutionInvalid { law: &'static str, witness: String },
    /// Transpose involution requested on a ring that is not a matrix ring.
    NotMatrixRing,
    /// Transpose involution requested over a noncommutative base ring.
    BaseNotCommutative { witness: String },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::AxiomFailed { law, witness } => {
                write!(f, "ring axiom `{law}` failed at {witness}")
            }
            RingError::NotIdempotent { element } => {
                write!(f, "corner element {element} is not idempotent")
            }
            RingError::ZeroQuotient => write!(f, "quotient ideal contains 1 (zero ring rejected)"),
            RingError::TooLarge { detail } => write!(f, "ring too large: {detail}"),
            RingError::InvolutionInvalid { law, witness } => {
                write!(f, "involution law `{law}` failed at {witness}")
            }
            RingError::NotMatrixRing => write!(f, "transpose involution needs a matrix ring"),
            RingError::BaseNotCommutative { witness } => {
                write!(f, "transpose involution needs a commutative base ring ({witness})")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// Structural shape of a ring.
#[derive(Debug, Clone)]
pub enum RingKind {
    /// Z/n, least nonnegative residues.
    Modular { n: usize },
    /// k×k matrices over `base`.
    Matrix { k: usize, base: Arc<Ring> },
    /// Upper-triangular k×k matrices over `base`.
    Triangular { k: usize, base: Arc<Ring> },
    /// Direct product; elements are pairs.
    Product { left: Arc<Ring>, right: Arc<Ring> },
    /// Peirce corner eRe. `carrier[i]` is the base-ring id of corner element i,
    /// sorted ascending.
    Corner { base: Arc<Ring>, e: ElementId, carrier: Vec<ElementId> },
    /// Same carrier as `base`, multiplication arguments swapped.
    Opposite { base: Arc<Ring> },
    /// base / (two-sided ideal generated by `gens`). `reps[q]` is the least
    /// base-ring id in coset q; `class_of[b]` is the coset of base element b.
    Quotient { base: Arc<Ring>, gens: Vec<ElementId>, reps: Vec<ElementId>, class_of: Vec<u32> },
}

struct OpTables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

/// Units of a ring with their two-sided inverses.
#[derive(Debug, Clone)]
pub struct UnitData {
    /// `is_unit[a]` iff a has a two-sided inverse.
    pub is_unit: Vec<bool>,
    /// `inv[a]` is the inverse when `is_unit[a]`, else `u32::MAX`.
    pub inv: Vec<u32>,
    /// Unit ids in ascending order.
    pub units: Vec<ElementId>,
}

/// A finite ring, immutable after construction.
pub struct Ring {
    id: String,
    kind: RingKind,
    order: usize,
    zero: ElementId,
    one: ElementId,
    tables: Option<OpTables>,
    star_table: Option<Vec<u32>>,
    units: OnceLock<UnitData>,
    idems: OnceLock<Vec<ElementId>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({}, order {})", self.id, self.order)
    }
}

impl Ring {
    // ---- constructors ------------------------------------------------------

    /// Parse a ring-spec string and construct the ring it names.
    pub fn parse_spec(text: &str) -> Result<Arc<Ring>, SpecError> {
        parse::parse_spec(text)
    }

    /// Z/n for n ≥ 1 (Z/1 is the zero ring).
    pub fn modular(n: usize) -> Result<Arc<Ring>, RingError> {
        if n == 0 {
            return Err(RingError::TooLarge { detail: "modulus must be positive".into() });
        }
        if n > MAX_ORDER {
            return Err(RingError::TooLarge { detail: format!("Z/{n} exceeds max order") });
        }
        Ring::finish(format!("Z/{n}"), RingKind::Modular { n }, n)
    }

    /// Full k×k matrix ring over `base`.
    pub fn matrix(k: usize, base: Arc<Ring>) -> Result<Arc<Ring>, RingError> {
        assert!(k >= 1, "matrix dimension must be at least 1");
        let order = checked_pow(base.order, k * k, &format!("M({k},{})", base.id))?;
        let id = format!("M({k},{})", base.id);
        Ring::finish(id, RingKind::Matrix { k, base }, order)
    }

    /// Upper-triangular k×k matrix ring over `base`.
    pub fn triangular(k: usize, base: Arc<Ring>) -> Result<Arc<Ring>, RingError> {
        assert!(k >= 1, "matrix dimension must be at least 1");
        let m = k * (k + 1) / 2;
        let order = checked_pow(base.order, m, &format!("T({k},{})", base.id))?;
        let id = format!("T({k},{})", base.id);
        Ring::finish(id, RingKind::Triangular { k, base }, order)
    }

    /// Direct product `left × right`.
    pub fn product(left: Arc<Ring>, right: Arc<Ring>) -> Result<Arc<Ring>, RingError> {
        let order = left
            .order
            .checked_mul(right.order)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| RingError::TooLarge {
                detail: format!("{} x {} exceeds max order", left.id, right.id),
            })?;
        // Right factor that is itself a product is parenthesised so the id
        // re-parses to the same association.
        let rid = match &right.kind {
            RingKind::Product { .. } => format!("({})", right.id),
            _ => right.id.clone(),
        };
        let id = format!("{} x {}", left.id, rid);
        Ring::finish(id, RingKind::Product { left, right }, order)
    }

    /// Peirce corner ring eRe at an idempotent e of `base`.
    pub fn corner(base: &Arc<Ring>, e: ElementId) -> Result<Arc<Ring>, RingError> {
        if base.mul(e, e) != e {
            return Err(RingError::NotIdempotent { element: base.format_element(e) });
        }
        let mut set = BTreeSet::new();
        for r in 0..base.order {
            set.insert(base.mul(base.mul(e, r), e));
        }
        let carrier: Vec<ElementId> = set.into_iter().collect();
        let order = carrier.len();
        let id = format!("corner({},{})", base.id, base.format_element(e));
        Ring::finish(id, RingKind::Corner { base: base.clone(), e, carrier }, order)
    }

    /// Opposite ring: same carrier, multiplication arguments swapped.
    pub fn opposite(base: Arc<Ring>) -> Result<Arc<Ring>, RingError> {
        let order = base.order;
        let id = format!("op({})", base.id);
        Ring::finish(id, RingKind::Opposite { base }, order)
    }

    /// Quotient of `base` by the two-sided ideal generated by `gens`.
    /// Rejects ideals containing 1. The base must fit the table regime: ideal
    /// closure walks all products r·g·s.
    pub fn quotient(base: &Arc<Ring>, gens: &[ElementId]) -> Result<Arc<Ring>, RingError> {
        let n = base.order;
        if n > TABLE_LIMIT {
            return Err(RingError::TooLarge {
                detail: format!("quotient base {} has order {n} > {TABLE_LIMIT}", base.id),
            });
        }
        // Two-sided ideal closure: {r·g·s} is already closed under both-sided
        // multiplication, so only the additive span remains.
        let mut in_ideal = vec![false; n];
        let mut members: Vec<ElementId> = Vec::new();
        let push = |x: ElementId, in_ideal: &mut Vec<bool>, members: &mut Vec<ElementId>| {
            if !in_ideal[x] {
                in_ideal[x] = true;
                members.push(x);
            }
        };
        push(base.zero, &mut in_ideal, &mut members);
        for &g in gens {
            for r in 0..n {
                let rg = base.mul(r, g);
                for s in 0..n {
                    push(base.mul(rg, s), &mut in_ideal, &mut members);
                }
            }
        }
        // Additive closure by worklist: every popped x is summed against
        // everything already in the span.
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for j in 0..members.len() {
                let s = base.add(x, members[j]);
                if !in_ideal[s] {
                    in_ideal[s] = true;
                    members.push(s);
                }
            }
        }
        if in_ideal[base.one] {
            return Err(RingError::ZeroQuotient);
        }
        members.sort_unstable();
        let mut class_of = vec![u32::MAX; n];
        let mut reps: Vec<ElementId> = Vec::new();
        for a in 0..n {
            if class_of[a] != u32::MAX {
                continue;
            }
            let q = reps.len() as u32;
            for &j in &members {
                class_of[base.add(a, j)] = q;
            }
            reps.push(a);
        }
        let order = reps.len();
        let lits: Vec<String> = gens.iter().map(|&g| base.format_element(g)).collect();
        let id = format!("quot({},{})", base.id, lits.join(","));
        Ring::finish(
            id,
            RingKind::Quotient { base: base.clone(), gens: gens.to_vec(), reps, class_of },
            order,
        )
    }

    /// Attach the transpose involution to a matrix ring over a commutative base.
    /// Returns a new descriptor; the original is untouched.
    pub fn with_transpose(self: &Arc<Ring>) -> Result<Arc<Ring>, RingError> {
        let (k, base) = match &self.kind {
            RingKind::Matrix { k, base } => (*k, base.clone()),
            _ => return Err(RingError::NotMatrixRing),
        };
        // Commutativity of the base is what makes transpose an anti-automorphism.
        for a in 0..base.order {
            for b in 0..base.order {
                if base.mul(a, b) != base.mul(b, a) {
                    return Err(RingError::BaseNotCommutative {
                        witness: format!(
                            "{}·{} ≠ {}·{} in {}",
                            base.format_element(a),
                            base.format_element(b),
                            base.format_element(b),
                            base.format_element(a),
                            base.id
                        ),
                    });
                }
            }
        }
        let mut table = vec![0u32; self.order];
        for (x, slot) in table.iter_mut().enumerate() {
            let g = self.grid_of(x);
            let mut t = vec![0; k * k];
            for i in 0..k {
                for j in 0..k {
                    t[j * k + i] = g[i * k + j];
                }
            }
            *slot = self.of_grid(&t) as u32;
        }
        self.with_involution(table)
    }

    /// Attach an involution given as a full table. Verifies the star laws:
    /// (a*)* = a, (a+b)* = a*+b*, (ab)* = b*a*, 1* = 1.
    pub fn with_involution(self: &Arc<Ring>, table: Vec<u32>) -> Result<Arc<Ring>, RingError> {
        assert_eq!(table.len(), self.order, "involution table length must equal order");
        let star = |a: ElementId| table[a] as ElementId;
        if star(self.one) != self.one {
            return Err(RingError::InvolutionInvalid { law: "1* = 1", witness: "1".into() });
        }
        let check_pair = |a: ElementId, b: ElementId| -> Result<(), RingError> {
            if star(star(a)) != a {
                return Err(RingError::InvolutionInvalid {
                    law: "(a*)* = a",
                    witness: self.format_element(a),
                });
            }
            if star(self.add(a, b)) != self.add(star(a), star(b)) {
                return Err(RingError::InvolutionInvalid {
                    law: "(a+b)* = a*+b*",
                    witness: format!("a={}, b={}", self.format_element(a), self.format_element(b)),
                });
            }
            if star(self.mul(a, b)) != self.mul(star(b), star(a)) {
                return Err(RingError::InvolutionInvalid {
                    law: "(ab)* = b*a*",
                    witness: format!("a={}, b={}", self.format_element(a), self.format_element(b)),
                });
            }
            Ok(())
        };
        if self.order <= TABLE_LIMIT {
            for a in 0..self.order {
                for b in 0..self.order {
                    check_pair(a, b)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x57A2_7AB1);
            for _ in 0..SAMPLED_TRIPLES {
                check_pair(rng.gen_range(0..self.order), rng.gen_range(0..self.order))?;
            }
        }
        let ring = Ring {
            id: self.id.clone(),
            kind: self.kind.clone(),
            order: self.order,
            zero: self.zero,
            one: self.one,
            tables: if self.order <= TABLE_LIMIT { Some(self.build_tables()) } else { None },
            star_table: Some(table),
            units: OnceLock::new(),
            idems: OnceLock::new(),
        };
        Ok(Arc::new(ring))
    }

    fn finish(id: String, kind: RingKind, order: usize) -> Result<Arc<Ring>, RingError> {
        if order > MAX_ORDER {
            return Err(RingError::TooLarge { detail: format!("{id} has order {order}") });
        }
        assert!(order >= 1, "empty carrier");
        let mut ring = Ring {
            id,
            kind,
            order,
            zero: 0,
            one: 0,
            tables: None,
            star_table: None,
            units: OnceLock::new(),
            idems: OnceLock::new(),
        };
        ring.zero = ring.raw_zero();
        ring.one = ring.raw_one();
        // Canonical encodings put zero at index 0 in every kind.
        assert_eq!(ring.zero, 0, "zero must be element 0 in {}", ring.id);
        if order <= TABLE_LIMIT {
            ring.tables = Some(ring.build_tables());
        }
        ring.verify_axioms()?;
        Ok(Arc::new(ring))
    }

    // ---- basic queries -----------------------------------------------------

    /// Canonical spec string; parses back to an identically-shaped ring.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    /// All element ids, ascending.
    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    /// True when flat operation tables are stored (order ≤ [`TABLE_LIMIT`]).
    pub fn is_tabled(&self) -> bool {
        self.tables.is_some()
    }

    // ---- operations --------------------------------------------------------

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.tables {
            Some(t) => t.add[a * self.order + b] as ElementId,
            None => self.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.tables {
            Some(t) => t.mul[a * self.order + b] as ElementId,
            None => self.raw_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        match &self.tables {
            Some(t) => t.neg[a] as ElementId,
            None => self.raw_neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    /// a^k with a^0 = 1.
    pub fn pow(&self, a: ElementId, k: u32) -> ElementId {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Involution a ↦ a*, if one is attached.
    pub fn star(&self, a: ElementId) -> Option<ElementId> {
        self.star_table.as_ref().map(|t| t[a] as ElementId)
    }

    pub fn has_involution(&self) -> bool {
        self.star_table.is_some()
    }

    // ---- cached sets -------------------------------------------------------

    /// Units with inverses. First call scans all pairs; needs the table regime.
    pub fn units(&self) -> &UnitData {
        self.try_units().expect("unit enumeration needs order <= TABLE_LIMIT")
    }

    /// Units with inverses, or None when the ring is too large to scan.
    pub fn try_units(&self) -> Option<&UnitData> {
        if self.order > TABLE_LIMIT {
            return None;
        }
        Some(self.units.get_or_init(|| {
            let n = self.order;
            let mut right = vec![u32::MAX; n];
            let mut left = vec![u32::MAX; n];
            for a in 0..n {
                for b in 0..n {
                    if self.mul(a, b) == self.one {
                        if right[a] == u32::MAX {
                            right[a] = b as u32;
                        }
                        if left[b] == u32::MAX {
                            left[b] = a as u32;
                        }
                    }
                }
            }
            let mut is_unit = vec![false; n];
            let mut inv = vec![u32::MAX; n];
            let mut units = Vec::new();
            for a in 0..n {
                if right[a] != u32::MAX && left[a] != u32::MAX {
                    let b = right[a] as ElementId;
                    // In a finite ring a one-sided inverse of a two-sided
                    // invertible element is the inverse.
                    assert_eq!(self.mul(a, b), self.one);
                    assert_eq!(self.mul(b, a), self.one);
                    is_unit[a] = true;
                    inv[a] = b as u32;
                    units.push(a);
                }
            }
            UnitData { is_unit, inv, units }
        }))
    }

    #[inline]
    pub fn is_unit(&self, a: ElementId) -> bool {
        self.units().is_unit[a]
    }

    pub fn inverse(&self, a: ElementId) -> Option<ElementId> {
        let u = self.units();
        u.is_unit[a].then(|| u.inv[a] as ElementId)
    }

    /// All idempotents, ascending. Cached after the first scan.
    pub fn idempotents(&self) -> &[ElementId] {
        self.idems.get_or_init(|| (0..self.order).filter(|&a| self.mul(a, a) == a).collect())
    }

    #[inline]
    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.mul(a, a) == a
    }

    // ---- Peirce ------------------------------------------------------------

    /// Peirce split at an idempotent e.
    pub fn peirce_split(self: &Arc<Ring>, e: ElementId) -> Result<PeirceSplit, RingError> {
        if self.mul(e, e) != e {
            return Err(RingError::NotIdempotent { element: self.format_element(e) });
        }
        Ok(PeirceSplit { ring: self.clone(), e, f: self.sub(self.one, e) })
    }

    // ---- element text ------------------------------------------------------

    /// Encode a parsed literal as an element id.
    pub fn encode(&self, lit: &Literal) -> Result<ElementId, ElementError> {
        match &self.kind {
            RingKind::Modular { n } => match lit {
                Literal::Int(v) => Ok(v.rem_euclid(*n as i64) as ElementId),
                _ => Err(mismatch(format!("{} takes integer literals", self.id))),
            },
            RingKind::Matrix { k, base } => {
                let grid = grid_from_literal(lit, *k, base, false)?;
                Ok(self.of_grid(&grid))
            }
            RingKind::Triangular { k, base } => {
                let grid = grid_from_literal(lit, *k, base, true)?;
                Ok(self.of_grid(&grid))
            }
            RingKind::Product { left, right } => match lit {
                Literal::Tuple(items) if items.len() == 2 => {
                    let l = left.encode(&items[0])?;
                    let r = right.encode(&items[1])?;
                    Ok(l * right.order + r)
                }
                _ => Err(mismatch(format!("{} takes pair literals (l,r)", self.id))),
            },
            RingKind::Corner { base, carrier, .. } => {
                let b = base.encode(lit)?;
                carrier.binary_search(&b).map_err(|_| {
                    mismatch(format!("{} is not an element of {}", base.format_element(b), self.id))
                })
            }
            RingKind::Opposite { base } => base.encode(lit),
            RingKind::Quotient { base, class_of, .. } => {
                let b = base.encode(lit)?;
                Ok(class_of[b] as ElementId)
            }
        }
    }

    /// Parse a literal string and encode it.
    pub fn parse_element(&self, text: &str) -> Result<ElementId, ElementError> {
        self.encode(&parse_literal(text)?)
    }

    /// Canonical literal string of an element; round-trips through
    /// [`Ring::parse_element`].
    pub fn format_element(&self, a: ElementId) -> String {
        match &self.kind {
            RingKind::Modular { .. } => a.to_string(),
            RingKind::Matrix { k, base } | RingKind::Triangular { k, base } => {
                let grid = self.grid_of(a);
                let rows: Vec<String> = (0..*k)
                    .map(|i| {
                        let cells: Vec<String> =
                            (0..*k).map(|j| base.format_element(grid[i * k + j])).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            RingKind::Product { left, right } => {
                let l = a / right.order;
                let r = a % right.order;
                format!("({},{})", left.format_element(l), right.format_element(r))
            }
            RingKind::Corner { base, carrier, .. } => base.format_element(carrier[a]),
            RingKind::Opposite { base } => base.format_element(a),
            RingKind::Quotient { base, reps, .. } => base.format_element(reps[a]),
        }
    }

    // ---- structural evaluation ---------------------------------------------

    fn raw_zero(&self) -> ElementId {
        match &self.kind {
            RingKind::Modular { .. } => 0,
            RingKind::Matrix { .. } | RingKind::Triangular { .. } => 0,
            RingKind::Product { .. } => 0,
            RingKind::Corner { base, carrier, .. } => {
                carrier.binary_search(&base.zero).expect("0 = e·0·e lies in every corner")
            }
            RingKind::Opposite { base } => base.zero,
            RingKind::Quotient { base, class_of, .. } => class_of[base.zero] as ElementId,
        }
    }

    fn raw_one(&self) -> ElementId {
        match &self.kind {
            RingKind::Modular { n } => 1 % n,
            RingKind::Matrix { k, base } | RingKind::Triangular { k, base } => {
                let mut grid = vec![base.zero; k * k];
                for i in 0..*k {
                    grid[i * k + i] = base.one;
                }
                self.of_grid(&grid)
            }
            RingKind::Product { left, right } => left.one * right.order + right.one,
            RingKind::Corner { base: _, e, carrier } => {
                carrier.binary_search(e).expect("e = e·e·e lies in its own corner")
            }
            RingKind::Opposite { base } => base.one,
            RingKind::Quotient { base, class_of, .. } => class_of[base.one] as ElementId,
        }
    }

    fn raw_add(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.kind {
            RingKind::Modular { n } => (a + b) % n,
            RingKind::Matrix { base, .. } | RingKind::Triangular { base, .. } => {
                let (da, db) = (self.digits_of(a), self.digits_of(b));
                let sum: Vec<ElementId> =
                    da.iter().zip(&db).map(|(&x, &y)| base.add(x, y)).collect();
                self.of_digits(&sum)
            }
            RingKind::Product { left, right } => {
                let (la, ra) = (a / right.order, a % right.order);
                let (lb, rb) = (b / right.order, b % right.order);
                left.add(la, lb) * right.order + right.add(ra, rb)
            }
            RingKind::Corner { base, carrier, .. } => {
                let s = base.add(carrier[a], carrier[b]);
                carrier.binary_search(&s).expect("corner closed under addition")
            }
            RingKind::Opposite { base } => base.add(a, b),
            RingKind::Quotient { base, reps, class_of, .. } => {
                class_of[base.add(reps[a], reps[b])] as ElementId
            }
        }
    }

    fn raw_mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.kind {
            RingKind::Modular { n } => (a * b) % n,
            RingKind::Matrix { k, base } | RingKind::Triangular { k, base } => {
                let (ga, gb) = (self.grid_of(a), self.grid_of(b));
                let mut out = vec![base.zero; k * k];
                for i in 0..*k {
                    for j in 0..*k {
                        let mut acc = base.zero;
                        for l in 0..*k {
                            acc = base.add(acc, base.mul(ga[i * k + l], gb[l * k + j]));
                        }
                        out[i * k + j] = acc;
                    }
                }
                self.of_grid(&out)
            }
            RingKind::Product { left, right } => {
                let (la, ra) = (a / right.order, a % right.order);
                let (lb, rb) = (b / right.order, b % right.order);
                left.mul(la, lb) * right.order + right.mul(ra, rb)
            }
            RingKind::Corner { base, carrier, .. } => {
                let p = base.mul(carrier[a], carrier[b]);
                carrier.binary_search(&p).expect("corner closed under multiplication")
            }
            RingKind::Opposite { base } => base.mul(b, a),
            RingKind::Quotient { base, reps, class_of, .. } => {
                class_of[base.mul(reps[a], reps[b])] as ElementId
            }
        }
    }

    fn raw_neg(&self, a: ElementId) -> ElementId {
        match &self.kind {
            RingKind::Modular { n } => (n - a) % n,
            RingKind::Matrix { base, .. } | RingKind::Triangular { base, .. } => {
                let da = self.digits_of(a);
                let out: Vec<ElementId> = da.iter().map(|&x| base.neg(x)).collect();
                self.of_digits(&out)
            }
            RingKind::Product { left, right } => {
                let (la, ra) = (a / right.order, a % right.order);
                left.neg(la) * right.order + right.neg(ra)
            }
            RingKind::Corner { base, carrier, .. } => {
                let m = base.neg(carrier[a]);
                carrier.binary_search(&m).expect("corner closed under negation")
            }
            RingKind::Opposite { base } => base.neg(a),
            RingKind::Quotient { base, reps, class_of, .. } => {
                class_of[base.neg(reps[a])] as ElementId
            }
        }
    }

    /// Free coordinates of matrix kinds, row-major; upper triangle only for T.
    fn free_coords(&self) -> Vec<(usize, usize)> {
        match &self.kind {
            RingKind::Matrix { k, .. } => {
                (0..*k).flat_map(|i| (0..*k).map(move |j| (i, j))).collect()
            }
            RingKind::Triangular { k, .. } => {
                (0..*k).flat_map(|i| (i..*k).map(move |j| (i, j))).collect()
            }
            _ => unreachable!("free_coords on non-matrix kind"),
        }
    }

    fn base_ring(&self) -> &Arc<Ring> {
        match &self.kind {
            RingKind::Matrix { base, .. } | RingKind::Triangular { base, .. } => base,
            _ => unreachable!("base_ring on non-matrix kind"),
        }
    }

    /// Mixed-radix digits, most significant first.
    fn digits_of(&self, mut x: ElementId) -> Vec<ElementId> {
        let radix = self.base_ring().order;
        let m = self.free_coords().len();
        let mut d = vec![0; m];
        for slot in d.iter_mut().rev() {
            *slot = x % radix;
            x /= radix;
        }
        d
    }

    fn of_digits(&self, d: &[ElementId]) -> ElementId {
        let radix = self.base_ring().order;
        d.iter().fold(0, |acc, &v| acc * radix + v)
    }

    /// Full k×k grid of base-ring ids (zeros below the diagonal for T).
    fn grid_of(&self, x: ElementId) -> Vec<ElementId> {
        let k = match &self.kind {
            RingKind::Matrix { k, .. } | RingKind::Triangular { k, .. } => *k,
            _ => unreachable!("grid_of on non-matrix kind"),
        };
        let base = self.base_ring();
        let d = self.digits_of(x);
        let mut grid = vec![base.zero; k * k];
        for (&(i, j), &v) in self.free_coords().iter().zip(&d) {
            grid[i * k + j] = v;
        }
        grid
    }

    fn of_grid(&self, grid: &[ElementId]) -> ElementId {
        let k = match &self.kind {
            RingKind::Matrix { k, .. } | RingKind::Triangular { k, .. } => *k,
            _ => unreachable!("of_grid on non-matrix kind"),
        };
        let base = self.base_ring();
        let coords = self.free_coords();
        if let RingKind::Triangular { .. } = &self.kind {
            for i in 0..k {
                for j in 0..i {
                    debug_assert_eq!(
                        grid[i * k + j],
                        base.zero,
                        "triangular product left the upper triangle"
                    );
                }
            }
        }
        let d: Vec<ElementId> = coords.iter().map(|&(i, j)| grid[i * k + j]).collect();
        self.of_digits(&d)
    }

    // ---- tables and axioms ---------------------------------------------------

    fn build_tables(&self) -> OpTables {
        let n = self.order;
        let build = |f: &(dyn Fn(ElementId, ElementId) -> ElementId + Sync)| -> Vec<u16> {
            let mut t = vec![0u16; n * n];
            t.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = f(a, b) as u16;
                }
            });
            t
        };
        let add = build(&|a, b| self.raw_add(a, b));
        let mul = build(&|a, b| self.raw_mul(a, b));
        let neg = (0..n).map(|a| self.raw_neg(a) as u16).collect();
        OpTables { add, mul, neg }
    }

    fn verify_axioms(&self) -> Result<(), RingError> {
        let n = self.order;
        let fail = |law: &'static str, ids: &[ElementId]| {
            let parts: Vec<String> = ids.iter().map(|&x| self.format_element(x)).collect();
            Err(RingError::AxiomFailed { law, witness: format!("({})", parts.join(", ")) })
        };
        let check_unary = |a: ElementId| -> Result<(), RingError> {
            if self.add(a, self.zero) != a {
                return fail("a+0 = a", &[a]);
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail("a+(-a) = 0", &[a]);
            }
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return fail("1·a = a = a·1", &[a]);
            }
            Ok(())
        };
        let check_cubic = |a: ElementId, b: ElementId, c: ElementId| -> Result<(), RingError> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("(a+b)+c = a+(b+c)", &[a, b, c]);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("(ab)c = a(bc)", &[a, b, c]);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("a(b+c) = ab+ac", &[a, b, c]);
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail("(a+b)c = ac+bc", &[a, b, c]);
            }
            Ok(())
        };
        if n <= TABLE_LIMIT {
            for a in 0..n {
                check_unary(a)?;
            }
            (0..n).into_par_iter().try_for_each(|a| {
                for b in 0..n {
                    if self.add(a, b) != self.add(b, a) {
                        return fail("a+b = b+a", &[a, b]);
                    }
                }
                Ok(())
            })?;
            (0..n).into_par_iter().try_for_each(|a| {
                for b in 0..n {
                    for c in 0..n {
                        check_cubic(a, b, c)?;
                    }
                }
                Ok(())
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0A71_0A5E);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                check_unary(a)?;
                if self.add(a, b) != self.add(b, a) {
                    return fail("a+b = b+a", &[a, b]);
                }
                check_cubic(a, b, c)?;
            }
            Ok(())
        }
    }
}

fn mismatch(message: String) -> ElementError {
    ElementError::Mismatch { message }
}

fn checked_pow(base: usize, exp: usize, id: &str) -> Result<usize, RingError> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| RingError::TooLarge { detail: format!("{id} exceeds max order") })?;
    }
    Ok(acc.max(1))
}

fn grid_from_literal(
    lit: &Literal,
    k: usize,
    base: &Arc<Ring>,
    triangular: bool,
) -> Result<Vec<ElementId>, ElementError> {
    match lit {
        Literal::Basis(i, j) => {
            if *i > k || *j > k {
                return Err(mismatch(format!("E{i}{j} out of range for dimension {k}")));
            }
            if triangular && i > j {
                return Err(mismatch(format!("E{i}{j} lies below the diagonal")));
            }
            let mut grid = vec![base.zero; k * k];
            grid[(i - 1) * k + (j - 1)] = base.one;
            Ok(grid)
        }
        Literal::List(rows) => {
            if rows.len() != k {
                return Err(mismatch(format!("expected {k} rows, found {}", rows.len())));
            }
            let mut grid = vec![base.zero; k * k];
            for (i, row) in rows.iter().enumerate() {
                let Literal::List(cells) = row else {
                    return Err(mismatch("matrix rows must be lists".into()));
                };
                if cells.len() != k {
                    return Err(mismatch(format!(
                        "expected {k} columns, found {} in row {}",
                        cells.len(),
                        i + 1
                    )));
                }
                for (j, cell) in cells.iter().enumerate() {
                    let v = base.encode(cell)?;
                    if triangular && j < i && v != base.zero {
                        return Err(mismatch(format!(
                            "entry ({},{}) below the diagonal must be 0",
                            i + 1,
                            j + 1
                        )));
                    }
                    grid[i * k + j] = v;
                }
            }
            Ok(grid)
        }
        _ => Err(mismatch("matrix rings take [[..],..] or Eij literals".into())),
    }
}

/// Peirce decomposition of a ring at a complementary idempotent pair (e, f).
///
/// Every r splits uniquely as ere + erf + fre + frf.
pub struct PeirceSplit {
    ring: Arc<Ring>,
    pub e: ElementId,
    pub f: ElementId,
}

impl PeirceSplit {
    /// The quadruple (ere, erf, fre, frf).
    pub fn parts(&self, r: ElementId) -> [ElementId; 4] {
        let g = &self.ring;
        let (e, f) = (self.e, self.f);
        [
            g.mul(g.mul(e, r), e),
            g.mul(g.mul(e, r), f),
            g.mul(g.mul(f, r), e),
            g.mul(g.mul(f, r), f),
        ]
    }

    pub fn in_ere(&self, r: ElementId) -> bool {
        let g = &self.ring;
        g.mul(g.mul(self.e, r), self.e) == r
    }

    pub fn in_erf(&self, r: ElementId) -> bool {
        let g = &self.ring;
        g.mul(g.mul(self.e, r), self.f) == r
    }

    pub fn in_fre(&self, r: ElementId) -> bool {
        let g = &self.ring;
        g.mul(g.mul(self.f, r), self.e) == r
    }

    pub fn in_frf(&self, r: ElementId) -> bool {
        let g = &self.ring;
        g.mul(g.mul(self.f, r), self.f) == r
    }

    /// The corner ring eRe, with identity e.
    pub fn corner(&self) -> Result<Arc<Ring>, RingError> {
        Ring::corner(&self.ring, self.e)
    }
}
