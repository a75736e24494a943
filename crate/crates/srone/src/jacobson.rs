//! The generalized circle operation, Schur-complement block inversion, and
//! the symmetry checks built on them.
//!
//! Fix an element `x` of a ring. The operation `a ∘ b := a + b − axb` is
//! associative with identity 0, and membership of `a ∘ b` in the units, the
//! regular elements, or the unit-regular elements is symmetric in `a` and
//! `b`. That symmetry is decided here by direct computation on both sides;
//! the block-inversion machinery that proves it is implemented alongside,
//! with every inverse re-verified by multiplication rather than trusted.

use std::fmt;

use crate::classify;
use crate::ring::{ElementId, Ring};

/// The element classes the symmetry statements quantify over.
///
/// `StronglyRegular` is included because the symmetry claim *fails* there;
/// callers searching for that failure need the same interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementClass {
    Unit,
    Regular,
    UnitRegular,
    StronglyRegular,
}

impl ElementClass {
    /// Membership test, straight from the definition.
    pub fn contains(self, ring: &Ring, a: ElementId) -> bool {
        match self {
            ElementClass::Unit => ring.is_unit(a),
            ElementClass::Regular => classify::is_regular(ring, a),
            ElementClass::UnitRegular => classify::is_unit_regular(ring, a),
            ElementClass::StronglyRegular => classify::is_strongly_regular(ring, a),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ElementClass::Unit => "unit",
            ElementClass::Regular => "reg",
            ElementClass::UnitRegular => "ureg",
            ElementClass::StronglyRegular => "sreg",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobsonError {
    /// The (1,1) block handed to [`banachiewicz`] must be a unit.
    PivotNotAUnit { pivot: String },
    /// Peirce assembly at an element that is not idempotent.
    NotIdempotent { element: String },
    /// An input lies outside the Peirce component it was declared for.
    OutsideComponent { element: String, component: &'static str },
    /// A declared corner unit has no inverse within its corner.
    CornerNotAUnit { element: String, component: &'static str },
}

impl fmt::Display for JacobsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JacobsonError::PivotNotAUnit { pivot } => {
                write!(f, "block pivot {pivot} is not a unit")
            }
            JacobsonError::NotIdempotent { element } => {
                write!(f, "{element} is not idempotent")
            }
            JacobsonError::OutsideComponent { element, component } => {
                write!(f, "{element} does not lie in {component}")
            }
            JacobsonError::CornerNotAUnit { element, component } => {
                write!(f, "{element} is not invertible within {component}")
            }
        }
    }
}

impl std::error::Error for JacobsonError {}

/// The circle operation `a ∘ b = a + b − axb` for one fixed `x`.
pub struct CircleContext<'r> {
    ring: &'r Ring,
    x: ElementId,
}

impl<'r> CircleContext<'r> {
    pub fn new(ring: &'r Ring, x: ElementId) -> Self {
        CircleContext { ring, x }
    }

    pub fn x(&self) -> ElementId {
        self.x
    }

    /// `a + b − axb`.
    pub fn circle(&self, a: ElementId, b: ElementId) -> ElementId {
        let r = self.ring;
        r.sub(r.add(a, b), r.mul(r.mul(a, self.x), b))
    }

    /// The common value of `(a ∘ b) ∘ c` and `a ∘ (b ∘ c)` written out in
    /// full: `a+b+c−axb−bxc−axc+axbxc`. Exposed so associativity can be
    /// checked against an independently evaluated expression.
    pub fn triple_expansion(&self, a: ElementId, b: ElementId, c: ElementId) -> ElementId {
        let r = self.ring;
        let x = self.x;
        let axb = r.mul(r.mul(a, x), b);
        let bxc = r.mul(r.mul(b, x), c);
        let axc = r.mul(r.mul(a, x), c);
        let axbxc = r.mul(r.mul(axb, x), c);
        let mut acc = r.add(r.add(a, b), c);
        acc = r.sub(acc, axb);
        acc = r.sub(acc, bxc);
        acc = r.sub(acc, axc);
        r.add(acc, axbxc)
    }
}

/// A 2×2 block datum `[[u, q], [p, r]]` over a base ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block2 {
    pub u: ElementId,
    pub q: ElementId,
    pub p: ElementId,
    pub r: ElementId,
}

impl Block2 {
    pub fn diagonal(ring: &Ring, u: ElementId, r: ElementId) -> Self {
        Block2 { u, q: ring.zero(), p: ring.zero(), r }
    }

    pub fn identity(ring: &Ring) -> Self {
        Block2::diagonal(ring, ring.one(), ring.one())
    }

    fn mul(self, ring: &Ring, rhs: Block2) -> Block2 {
        Block2 {
            u: ring.add(ring.mul(self.u, rhs.u), ring.mul(self.q, rhs.p)),
            q: ring.add(ring.mul(self.u, rhs.q), ring.mul(self.q, rhs.r)),
            p: ring.add(ring.mul(self.p, rhs.u), ring.mul(self.r, rhs.p)),
            r: ring.add(ring.mul(self.p, rhs.q), ring.mul(self.r, rhs.r)),
        }
    }
}

/// Result of a Schur-complement membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockVerdict {
    /// `r − p·u⁻¹·q`.
    pub schur: ElementId,
    /// Membership of the Schur complement in the requested class, which is
    /// equivalent to membership of the whole block matrix in that class.
    pub in_class: bool,
    /// Present exactly when the class is `Unit` and the verdict is positive:
    /// the four blocks of the inverse, already re-verified by block
    /// multiplication on both sides.
    pub inverse: Option<Block2>,
}

/// Decide membership of the block matrix `[[u,q],[p,r]]` in a class through
/// its Schur complement, given that `u` is a unit.
///
/// For the unit class the inverse blocks are assembled as
/// `[[u⁻¹+u⁻¹qs⁻¹pu⁻¹, −u⁻¹qs⁻¹], [−s⁻¹pu⁻¹, s⁻¹]]` with `s = r−pu⁻¹q`,
/// then checked by multiplying out both products; the algebra is never
/// trusted bare.
pub fn banachiewicz(
    ring: &Ring,
    blk: Block2,
    class: ElementClass,
) -> Result<BlockVerdict, JacobsonError> {
    let ui = ring.inverse(blk.u).ok_or_else(|| JacobsonError::PivotNotAUnit {
        pivot: ring.format_element(blk.u),
    })?;
    let schur = ring.sub(blk.r, ring.mul(ring.mul(blk.p, ui), blk.q));
    let in_class = class.contains(ring, schur);
    let inverse = if class == ElementClass::Unit && in_class {
        let si = ring
            .inverse(schur)
            .expect("schur complement passed the unit test");
        let uiq = ring.mul(ui, blk.q);
        let pui = ring.mul(blk.p, ui);
        let inv = Block2 {
            u: ring.add(ui, ring.mul(ring.mul(uiq, si), pui)),
            q: ring.neg(ring.mul(uiq, si)),
            p: ring.neg(ring.mul(si, pui)),
            r: si,
        };
        let id = Block2::identity(ring);
        assert!(
            blk.mul(ring, inv) == id && inv.mul(ring, blk) == id,
            "inverse blocks failed re-verification in {}",
            ring.id()
        );
        Some(inv)
    } else {
        None
    };
    Ok(BlockVerdict { schur, in_class, inverse })
}

/// Invert `x + p + y` for `x ∈ U(eRe)`, `p ∈ fRe`, `y ∈ U(fRf)` with
/// `f = 1−e`. The inverse is `x′ + p′ + y′` where `x′, y′` are the corner
/// inverses and `p′ = −y′·p·x′`; the product is re-verified on both sides
/// before being returned.
pub fn peirce_inverse(
    ring: &Ring,
    e: ElementId,
    x: ElementId,
    p: ElementId,
    y: ElementId,
) -> Result<ElementId, JacobsonError> {
    if !ring.is_idempotent(e) {
        return Err(JacobsonError::NotIdempotent {
            element: ring.format_element(e),
        });
    }
    let f = ring.sub(ring.one(), e);
    require_component(ring, x, e, e, "eRe")?;
    require_component(ring, p, f, e, "fRe")?;
    require_component(ring, y, f, f, "fRf")?;
    let xi = corner_inverse(ring, e, x).ok_or_else(|| JacobsonError::CornerNotAUnit {
        element: ring.format_element(x),
        component: "eRe",
    })?;
    let yi = corner_inverse(ring, f, y).ok_or_else(|| JacobsonError::CornerNotAUnit {
        element: ring.format_element(y),
        component: "fRf",
    })?;
    let pi = ring.neg(ring.mul(ring.mul(yi, p), xi));
    let total = ring.add(ring.add(x, p), y);
    let inverse = ring.add(ring.add(xi, pi), yi);
    let one = ring.one();
    assert!(
        ring.mul(total, inverse) == one && ring.mul(inverse, total) == one,
        "peirce inverse failed re-verification in {}",
        ring.id()
    );
    Ok(inverse)
}

fn require_component(
    ring: &Ring,
    a: ElementId,
    left: ElementId,
    right: ElementId,
    name: &'static str,
) -> Result<(), JacobsonError> {
    if ring.mul(ring.mul(left, a), right) == a {
        Ok(())
    } else {
        Err(JacobsonError::OutsideComponent {
            element: ring.format_element(a),
            component: name,
        })
    }
}

/// Two-sided inverse of `x` within the corner `eRe` (identity `e`), found by
/// scanning the corner; `None` if `x` is not a unit there.
fn corner_inverse(ring: &Ring, e: ElementId, x: ElementId) -> Option<ElementId> {
    ring.elements().find(|&c| {
        ring.mul(ring.mul(e, c), e) == c && ring.mul(x, c) == e && ring.mul(c, x) == e
    })
}

/// Evaluate both sides of the circle symmetry for one triple:
/// `(a+b−axb ∈ class, a+b−bxa ∈ class)`. The two memberships agree for the
/// unit, regular, and unit-regular classes; for the strongly regular class
/// they can differ, and callers go looking for exactly that.
pub fn sjl_check(
    ring: &Ring,
    a: ElementId,
    b: ElementId,
    x: ElementId,
    class: ElementClass,
) -> (bool, bool) {
    let sum = ring.add(a, b);
    let axb = ring.sub(sum, ring.mul(ring.mul(a, x), b));
    let bxa = ring.sub(sum, ring.mul(ring.mul(b, x), a));
    (class.contains(ring, axb), class.contains(ring, bxa))
}

/// One of the three differences that land in `class + class` when all four
/// window expressions are in the class: `target = left + right` with both
/// summands members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassPairDecomposition {
    pub target: ElementId,
    pub left: ElementId,
    pub right: ElementId,
}

/// Outcome of the four-expression equivalence at `(a, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowVerdict {
    /// Memberships of `1−ax+axa`, `1−xa+axa`, `1−ax+a²x`, `1−xa+xa²`,
    /// in that order.
    pub memberships: [bool; 4],
    /// When all four memberships hold: decompositions of `ax−xa`,
    /// `axa−xa²`, and `axa−a²x` as sums of two class members, obtained by
    /// subtracting expression 1 from 2, 4 from 2, and 3 from 1.
    pub decompositions: Option<[ClassPairDecomposition; 3]>,
}

/// Check the four-way equivalence `1−ax+axa / 1−xa+axa / 1−ax+a²x /
/// 1−xa+xa² ∈ class` at `(a, x)`, and when all four hold produce the
/// commutator decompositions, each re-verified.
pub fn prop36_check(ring: &Ring, a: ElementId, x: ElementId, class: ElementClass) -> WindowVerdict {
    let one = ring.one();
    let ax = ring.mul(a, x);
    let xa = ring.mul(x, a);
    let axa = ring.mul(ax, a);
    let a2x = ring.mul(a, ax);
    let xa2 = ring.mul(xa, a);
    let exprs = [
        ring.add(ring.sub(one, ax), axa),
        ring.add(ring.sub(one, xa), axa),
        ring.add(ring.sub(one, ax), a2x),
        ring.add(ring.sub(one, xa), xa2),
    ];
    let memberships = [
        class.contains(ring, exprs[0]),
        class.contains(ring, exprs[1]),
        class.contains(ring, exprs[2]),
        class.contains(ring, exprs[3]),
    ];
    let decompositions = if memberships.iter().all(|&m| m) {
        let decompose = |target: ElementId, minuend: usize, subtrahend: usize| {
            let left = exprs[minuend];
            let right = ring.neg(exprs[subtrahend]);
            assert_eq!(
                ring.add(left, right),
                target,
                "decomposition identity failed in {}",
                ring.id()
            );
            assert!(
                class.contains(ring, left) && class.contains(ring, right),
                "decomposition summand left its class in {}",
                ring.id()
            );
            ClassPairDecomposition { target, left, right }
        };
        Some([
            decompose(ring.sub(ax, xa), 1, 0),
            decompose(ring.sub(axa, xa2), 1, 3),
            decompose(ring.sub(axa, a2x), 0, 2),
        ])
    } else {
        None
    };
    WindowVerdict { memberships, decompositions }
}
