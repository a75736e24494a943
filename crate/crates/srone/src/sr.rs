//! Stable range one for single ring elements: decision procedures and
//! certificate-producing constructions.
//!
//! An element `a` has right stable range one when every comaximal pair
//! `aR + tR = R` can be completed to a unit `a + tb`. Over a finite ring the
//! workable form quantifies one element at a time: for every `x` there is a
//! `b` with `a + b − axb` a unit; the left side mirrors both statements.
//! The refined variants constrain where the witness `b` may come from
//! (units, idempotents, regular elements, perfect squares).
//!
//! Everything that claims a witness returns a [`WitnessCertificate`], and
//! every certificate is re-verified by multiplication before it leaves the
//! constructor. The constructions deliberately follow the algebraic proofs
//! (idempotent assembly, product chaining, unit transport, corner
//! suspension) instead of bare search, with search kept as a cross-check
//! and fallback.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::json;

use crate::classify;
use crate::jacobson::{self, JacobsonError};
use crate::ring::{ElementId, Ring};

/// Which of the two mirror-image conditions is being used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(format!("unknown side `{other}` (expected right or left)")),
        }
    }
}

/// Where the witness `b` must come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariantKind {
    /// Any element of the ring.
    Full,
    /// Units only.
    Unit,
    /// Idempotents only.
    Idempotent,
    /// Regular elements only.
    Regular,
    /// Perfect squares `c²` only.
    Square,
}

impl VariantKind {
    pub const ALL: [VariantKind; 5] = [
        VariantKind::Full,
        VariantKind::Unit,
        VariantKind::Idempotent,
        VariantKind::Regular,
        VariantKind::Square,
    ];

    pub fn label(self) -> &'static str {
        match self {
            VariantKind::Full => "full",
            VariantKind::Unit => "unit",
            VariantKind::Idempotent => "idempotent",
            VariantKind::Regular => "regular",
            VariantKind::Square => "square",
        }
    }

    /// Membership of one element in this variant's witness set.
    pub fn admits(self, ring: &Ring, b: ElementId) -> bool {
        match self {
            VariantKind::Full => true,
            VariantKind::Unit => ring.is_unit(b),
            VariantKind::Idempotent => ring.is_idempotent(b),
            VariantKind::Regular => classify::is_regular(ring, b),
            VariantKind::Square => ring.elements().any(|c| ring.mul(c, c) == b),
        }
    }
}

impl FromStr for VariantKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(VariantKind::Full),
            "unit" => Ok(VariantKind::Unit),
            "idempotent" => Ok(VariantKind::Idempotent),
            "regular" => Ok(VariantKind::Regular),
            "square" => Ok(VariantKind::Square),
            other => Err(format!(
                "unknown variant `{other}` (expected full, unit, idempotent, regular, or square)"
            )),
        }
    }
}

/// The witness set of a variant, ascending.
pub fn variant_set(ring: &Ring, variant: VariantKind) -> Vec<ElementId> {
    match variant {
        VariantKind::Full => ring.elements().collect(),
        VariantKind::Unit => ring.units().units.clone(),
        VariantKind::Idempotent => ring.idempotents().to_vec(),
        VariantKind::Regular => ring
            .elements()
            .filter(|&b| classify::is_regular(ring, b))
            .collect(),
        VariantKind::Square => {
            let mut present = vec![false; ring.order()];
            for c in ring.elements() {
                present[ring.mul(c, c)] = true;
            }
            ring.elements().filter(|&b| present[b]).collect()
        }
    }
}

/// The certified shape of the unit: `a + t·b` (pair) or `a + b − axb`
/// (form3), with sides mirrored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    Pair,
    Form3,
}

impl WitnessMode {
    pub fn label(self) -> &'static str {
        match self {
            WitnessMode::Pair => "pair",
            WitnessMode::Form3 => "form3",
        }
    }
}

/// Which construction produced a certificate. Diagnostic only; never
/// serialized and not part of certificate equality semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessPath {
    /// `a` was already a unit, so `b = 0`.
    UnitShortcut,
    /// The idempotent assembly `b = yf`, `u = 1 − exf`.
    IdempotentAssembly,
    /// The constructive chain through a form3 witness, or the product chain.
    Chain,
    /// Direct ascending search.
    Scan,
    /// Rewritten from another certificate by unit translation or an
    /// involution.
    Transport,
    /// Corner suspension assembly.
    Suspension,
}

/// A fully-checked witness: the named unit, its inverse, and the data that
/// reproduce it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub mode: WitnessMode,
    pub side: Side,
    pub variant: VariantKind,
    pub a: ElementId,
    /// `t` for pair mode, `x` for form3 mode.
    pub t_or_x: ElementId,
    pub b: ElementId,
    pub u: ElementId,
    pub unit_inverse: ElementId,
    pub path: WitnessPath,
}

impl WitnessCertificate {
    /// Recompute everything the certificate claims: the defining identity,
    /// the two-sided inverse, and the variant membership of `b`.
    pub fn verify(&self, ring: &Ring) -> bool {
        let sum = ring.add(self.a, self.b);
        let expected = match (self.mode, self.side) {
            (WitnessMode::Pair, Side::Right) => ring.add(self.a, ring.mul(self.t_or_x, self.b)),
            (WitnessMode::Pair, Side::Left) => ring.add(self.a, ring.mul(self.b, self.t_or_x)),
            (WitnessMode::Form3, Side::Right) => {
                ring.sub(sum, ring.mul(ring.mul(self.a, self.t_or_x), self.b))
            }
            (WitnessMode::Form3, Side::Left) => {
                ring.sub(sum, ring.mul(ring.mul(self.b, self.t_or_x), self.a))
            }
        };
        let one = ring.one();
        expected == self.u
            && ring.mul(self.u, self.unit_inverse) == one
            && ring.mul(self.unit_inverse, self.u) == one
            && self.variant.admits(ring, self.b)
    }

    /// Serialization with elements rendered as literals of `ring`.
    pub fn render(&self, ring: &Ring) -> serde_json::Value {
        json!({
            "mode": self.mode.label(),
            "side": self.side.label(),
            "variant": self.variant.label(),
            "a": ring.format_element(self.a),
            "t_or_x": ring.format_element(self.t_or_x),
            "b": ring.format_element(self.b),
            "u": ring.format_element(self.u),
            "u_inv": ring.format_element(self.unit_inverse),
        })
    }

    fn checked(self, ring: &Ring) -> WitnessCertificate {
        assert!(
            self.verify(ring),
            "constructed certificate failed re-verification in {}: {self:?}",
            ring.id()
        );
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrError {
    /// `aR + tR = R` (or its left mirror) does not hold.
    NotComaximal { a: String, t: String },
    /// A transport or converse step needs a unit and did not get one.
    NotAUnit { element: String },
    /// Suspension at an element that is not idempotent.
    NotIdempotent { element: String },
    /// An input lies outside its declared Peirce component.
    OutsideComponent { element: String, component: &'static str },
    /// A unit handed to the suspension converse is not block lower
    /// triangular of the required form.
    ShapeMismatch { element: String, detail: &'static str },
    /// An oracle returned a certificate that does not certify what the
    /// chain step needed.
    OracleContract { factor: usize, detail: String },
    /// An oracle failed outright; the inner error is preserved.
    Oracle { factor: usize, source: Box<SrError> },
    /// Product chains need at least one factor.
    EmptyProduct,
    /// A Peirce assembly step failed.
    Assembly(JacobsonError),
}

impl fmt::Display for SrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrError::NotComaximal { a, t } => {
                write!(f, "{a} and {t} do not generate the unit ideal")
            }
            SrError::NotAUnit { element } => write!(f, "{element} is not a unit"),
            SrError::NotIdempotent { element } => write!(f, "{element} is not idempotent"),
            SrError::OutsideComponent { element, component } => {
                write!(f, "{element} does not lie in {component}")
            }
            SrError::ShapeMismatch { element, detail } => {
                write!(f, "{element} is not of the required block shape: {detail}")
            }
            SrError::OracleContract { factor, detail } => {
                write!(f, "oracle for factor {factor} broke its contract: {detail}")
            }
            SrError::Oracle { factor, source } => {
                write!(f, "oracle for factor {factor} failed: {source}")
            }
            SrError::EmptyProduct => write!(f, "product chain needs at least one factor"),
            SrError::Assembly(e) => write!(f, "inverse assembly failed: {e}"),
        }
    }
}

impl std::error::Error for SrError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            SrError::Oracle { source, .. } => Some(source.as_ref()),
            SrError::Assembly(e) => Some(e),
            _ => None,
        }
    }
}

impl From<JacobsonError> for SrError {
    fn from(e: JacobsonError) -> Self {
        SrError::Assembly(e)
    }
}

fn circle_value(ring: &Ring, a: ElementId, x: ElementId, b: ElementId, side: Side) -> ElementId {
    let sum = ring.add(a, b);
    match side {
        Side::Right => ring.sub(sum, ring.mul(ring.mul(a, x), b)),
        Side::Left => ring.sub(sum, ring.mul(ring.mul(b, x), a)),
    }
}

/// Decide the element-wise stable range one property: for every `x` some
/// witness `b` from the variant's set makes `a + b − axb` (right) or
/// `a + b − bxa` (left) a unit.
pub fn has_sr1(ring: &Ring, a: ElementId, side: Side, variant: VariantKind) -> bool {
    let witnesses = variant_set(ring, variant);
    ring.elements().all(|x| {
        witnesses
            .iter()
            .any(|&b| ring.is_unit(circle_value(ring, a, x, b, side)))
    })
}

/// The same decision routed through the opposite ring: the mirrored
/// property there must agree with the direct computation here. Kept as a
/// cross-check against transcription errors in the mirrored formulas.
pub fn has_sr1_via_opposite(ring: &Arc<Ring>, a: ElementId, side: Side, variant: VariantKind) -> bool {
    let op = Ring::opposite(Arc::clone(ring)).expect("opposite ring of a valid ring");
    has_sr1(&op, a, side.flip(), variant)
}

/// First witness (ascending) for one quantifier instance `(a, x)`, as a
/// checked certificate; `None` when the variant's set contains no witness.
pub fn sr1_witness(
    ring: &Ring,
    a: ElementId,
    x: ElementId,
    side: Side,
    variant: VariantKind,
) -> Option<WitnessCertificate> {
    variant_set(ring, variant)
        .into_iter()
        .find(|&b| ring.is_unit(circle_value(ring, a, x, b, side)))
        .map(|b| {
            let u = circle_value(ring, a, x, b, side);
            WitnessCertificate {
                mode: WitnessMode::Form3,
                side,
                variant,
                a,
                t_or_x: x,
                b,
                u,
                unit_inverse: ring.inverse(u).expect("witness value passed the unit test"),
                path: WitnessPath::Scan,
            }
            .checked(ring)
        })
}

/// First `(x, y)` in lexicographic order with `a·x + t·y = 1`, if any.
fn comaximality_evidence(
    ring: &Ring,
    a: ElementId,
    t: ElementId,
) -> Option<(ElementId, ElementId)> {
    let one = ring.one();
    for x in ring.elements() {
        let ax = ring.mul(a, x);
        for y in ring.elements() {
            if ring.add(ax, ring.mul(t, y)) == one {
                return Some((x, y));
            }
        }
    }
    None
}

/// Complete the comaximal pair `aR + tR = R` to a unit `a + tb`.
///
/// Construction order: a unit `a` needs no witness at all (`b = 0`); an
/// idempotent `a = e` uses the assembly `b = yf`, which lands on the unit
/// `1 − exf` with explicit inverse `1 + exf`; otherwise the comaximality
/// equation `ax + ty = 1` is rerouted through a form3 witness at that `x`
/// (`b = y·b₀`), unless a direct ascending scan terminates sooner, in which
/// case the scanned witness is returned and the certificate says so.
pub fn pair_witness(ring: &Ring, a: ElementId, t: ElementId) -> Result<WitnessCertificate, SrError> {
    let (x, y) = comaximality_evidence(ring, a, t).ok_or_else(|| SrError::NotComaximal {
        a: ring.format_element(a),
        t: ring.format_element(t),
    })?;
    let one = ring.one();

    if let Some(a_inv) = ring.inverse(a) {
        return Ok(WitnessCertificate {
            mode: WitnessMode::Pair,
            side: Side::Right,
            variant: VariantKind::Full,
            a,
            t_or_x: t,
            b: ring.zero(),
            u: a,
            unit_inverse: a_inv,
            path: WitnessPath::UnitShortcut,
        }
        .checked(ring));
    }

    if ring.is_idempotent(a) {
        // From ex + ty = 1: right-multiplying by f = 1−e gives exf + tyf = f,
        // so e + t(yf) = e + f − exf = 1 − exf, and exf squares to zero
        // because fe = 0; hence the inverse is 1 + exf.
        let f = ring.sub(one, a);
        let b = ring.mul(y, f);
        let exf = ring.mul(ring.mul(a, x), f);
        let u = ring.sub(one, exf);
        debug_assert_eq!(u, ring.add(a, ring.mul(t, b)));
        return Ok(WitnessCertificate {
            mode: WitnessMode::Pair,
            side: Side::Right,
            variant: VariantKind::Full,
            a,
            t_or_x: t,
            b,
            u,
            unit_inverse: ring.add(one, exf),
            path: WitnessPath::IdempotentAssembly,
        }
        .checked(ring));
    }

    // Constructive chain: a form3 witness b₀ at the x from the comaximality
    // equation gives a + t(y·b₀) = a + (1−ax)b₀ = a + b₀ − axb₀ ∈ U.
    let chain = ring
        .elements()
        .find(|&b0| ring.is_unit(circle_value(ring, a, x, b0, Side::Right)));
    // Direct fallback: scan b itself.
    let scan = ring
        .elements()
        .find(|&b| ring.is_unit(ring.add(a, ring.mul(t, b))));
    let (b, path) = match (chain, scan) {
        (Some(b0), Some(bs)) if bs < b0 => (bs, WitnessPath::Scan),
        (Some(b0), _) => (ring.mul(y, b0), WitnessPath::Chain),
        (None, Some(bs)) => (bs, WitnessPath::Scan),
        (None, None) => unreachable!(
            "comaximal pair without a witness in the finite ring {}",
            ring.id()
        ),
    };
    let u = ring.add(a, ring.mul(t, b));
    Ok(WitnessCertificate {
        mode: WitnessMode::Pair,
        side: Side::Right,
        variant: VariantKind::Full,
        a,
        t_or_x: t,
        b,
        u,
        unit_inverse: ring.inverse(u).unwrap_or_else(|| {
            panic!("chain produced a non-unit in {}", ring.id())
        }),
        path,
    }
    .checked(ring))
}

/// Anything that can complete one comaximal pair to a certified unit.
pub trait PairOracle {
    fn witness(&self, ring: &Ring, a: ElementId, t: ElementId)
        -> Result<WitnessCertificate, SrError>;
}

impl<F> PairOracle for F
where
    F: Fn(&Ring, ElementId, ElementId) -> Result<WitnessCertificate, SrError>,
{
    fn witness(
        &self,
        ring: &Ring,
        a: ElementId,
        t: ElementId,
    ) -> Result<WitnessCertificate, SrError> {
        self(ring, a, t)
    }
}

/// Certify the product `a₁⋯aₙ` against `t` using only per-factor oracles
/// and ring arithmetic: the head factor's unit `u₁ = a₁ + t·b₁` converts
/// the comaximality equation into one for the tail against `u₁⁻¹t`, the
/// chain recurses, and the pieces reassemble as `b = b₁·(a₂⋯aₙ) + b_rest`,
/// `u = u₁·u_rest`. No global witness search happens here.
pub fn product_witness(
    ring: &Ring,
    factors: &[ElementId],
    t: ElementId,
    oracles: &[&dyn PairOracle],
) -> Result<WitnessCertificate, SrError> {
    if factors.is_empty() {
        return Err(SrError::EmptyProduct);
    }
    assert_eq!(
        factors.len(),
        oracles.len(),
        "one pair oracle per factor is required"
    );
    let product = factors[1..]
        .iter()
        .fold(factors[0], |acc, &g| ring.mul(acc, g));
    let (x, y) = comaximality_evidence(ring, product, t).ok_or_else(|| SrError::NotComaximal {
        a: ring.format_element(product),
        t: ring.format_element(t),
    })?;
    let (b, u) = chain_step(ring, factors, t, x, y, oracles, 0)?;
    let direct = ring.add(product, ring.mul(t, b));
    assert_eq!(
        direct, u,
        "chain unit disagrees with a + tb in {}",
        ring.id()
    );
    Ok(WitnessCertificate {
        mode: WitnessMode::Pair,
        side: Side::Right,
        variant: VariantKind::Full,
        a: product,
        t_or_x: t,
        b,
        u,
        unit_inverse: ring
            .inverse(u)
            .unwrap_or_else(|| panic!("product chain produced a non-unit in {}", ring.id())),
        path: WitnessPath::Chain,
    }
    .checked(ring))
}

/// One level of the product chain. `x`, `y` carry the comaximality
/// evidence `(∏ factors)·x + t·y = 1` for the current tail.
fn chain_step(
    ring: &Ring,
    factors: &[ElementId],
    t: ElementId,
    x: ElementId,
    y: ElementId,
    oracles: &[&dyn PairOracle],
    depth: usize,
) -> Result<(ElementId, ElementId), SrError> {
    let head = factors[0];
    let cert = oracles[0]
        .witness(ring, head, t)
        .map_err(|e| SrError::Oracle {
            factor: depth,
            source: Box::new(e),
        })?;
    let contract_ok = cert.mode == WitnessMode::Pair
        && cert.side == Side::Right
        && cert.a == head
        && cert.t_or_x == t
        && cert.verify(ring);
    if !contract_ok {
        return Err(SrError::OracleContract {
            factor: depth,
            detail: format!(
                "expected a verified right pair certificate for a={}, t={}",
                ring.format_element(head),
                ring.format_element(t)
            ),
        });
    }
    if factors.len() == 1 {
        return Ok((cert.b, cert.u));
    }
    let tail: ElementId = factors[2..]
        .iter()
        .fold(factors[1], |acc, &g| ring.mul(acc, g));
    let one = ring.one();
    // u₁·(tail·x) + t·(y − b₁·tail·x) = (a₁ + t·b₁)·tail·x + t·y − t·b₁·tail·x
    //                                 = a₁·tail·x + t·y = 1,
    // so left-multiplying by u₁⁻¹: tail·(x·u₁) + (u₁⁻¹t)·((y − b₁·tail·x)·u₁) = 1.
    let u1_inv_t = ring.mul(cert.unit_inverse, t);
    let x_next = ring.mul(x, cert.u);
    let y_next = ring.mul(
        ring.sub(y, ring.mul(ring.mul(cert.b, tail), x)),
        cert.u,
    );
    assert_eq!(
        ring.add(ring.mul(tail, x_next), ring.mul(u1_inv_t, y_next)),
        one,
        "chain invariant broke at factor {depth} in {}",
        ring.id()
    );
    let (b_rest, u_rest) = chain_step(
        ring,
        &factors[1..],
        u1_inv_t,
        x_next,
        y_next,
        &oracles[1..],
        depth + 1,
    )?;
    let b = ring.add(ring.mul(cert.b, tail), b_rest);
    let u = ring.mul(cert.u, u_rest);
    Ok((b, u))
}

/// Rewrite a certificate for `a` into one for `u·a·v`, `u` and `v` units.
/// Pair data move by `t ↦ ut` (right) or `t ↦ tv` (left); form3 data move
/// by `x ↦ v⁻¹xu⁻¹`. The witness keeps its declared variant when it still
/// qualifies after the rewrite and degrades to `full` otherwise.
pub fn transport_witness(
    ring: &Ring,
    cert: &WitnessCertificate,
    u: ElementId,
    v: ElementId,
) -> Result<WitnessCertificate, SrError> {
    let u_inv = ring.inverse(u).ok_or_else(|| SrError::NotAUnit {
        element: ring.format_element(u),
    })?;
    let v_inv = ring.inverse(v).ok_or_else(|| SrError::NotAUnit {
        element: ring.format_element(v),
    })?;
    assert!(
        cert.verify(ring),
        "transport input certificate is invalid in {}",
        ring.id()
    );
    let a = ring.mul(ring.mul(u, cert.a), v);
    let unit = ring.mul(ring.mul(u, cert.u), v);
    let (t_or_x, b) = match (cert.mode, cert.side) {
        (WitnessMode::Pair, Side::Right) => (ring.mul(u, cert.t_or_x), ring.mul(cert.b, v)),
        (WitnessMode::Pair, Side::Left) => (ring.mul(cert.t_or_x, v), ring.mul(u, cert.b)),
        (WitnessMode::Form3, _) => (
            ring.mul(ring.mul(v_inv, cert.t_or_x), u_inv),
            ring.mul(ring.mul(u, cert.b), v),
        ),
    };
    let variant = if cert.variant.admits(ring, b) {
        cert.variant
    } else {
        VariantKind::Full
    };
    Ok(WitnessCertificate {
        mode: cert.mode,
        side: cert.side,
        variant,
        a,
        t_or_x,
        b,
        u: unit,
        unit_inverse: ring.mul(ring.mul(v_inv, cert.unit_inverse), u_inv),
        path: WitnessPath::Transport,
    }
    .checked(ring))
}

/// Push a certificate through the ring's involution: star every element and
/// flip the side. Witness variants survive because each witness set is
/// star-closed. Returns `None` when the ring carries no involution.
pub fn involution_transport(ring: &Ring, cert: &WitnessCertificate) -> Option<WitnessCertificate> {
    let star = |a: ElementId| ring.star(a);
    let a = star(cert.a)?;
    assert!(
        cert.verify(ring),
        "involution transport input certificate is invalid in {}",
        ring.id()
    );
    Some(
        WitnessCertificate {
            mode: cert.mode,
            side: cert.side.flip(),
            variant: cert.variant,
            a,
            t_or_x: star(cert.t_or_x)?,
            b: star(cert.b)?,
            u: star(cert.u)?,
            unit_inverse: star(cert.unit_inverse)?,
            path: WitnessPath::Transport,
        }
        .checked(ring),
    )
}

/// Anything that can produce a corner witness: `r ∈ eRe` with `a + t·r` a
/// unit of the corner `eRe` (whose identity is `e`).
pub trait CornerOracle {
    fn corner_witness(
        &self,
        ring: &Ring,
        e: ElementId,
        a: ElementId,
        t: ElementId,
    ) -> Result<ElementId, SrError>;
}

impl<F> CornerOracle for F
where
    F: Fn(&Ring, ElementId, ElementId, ElementId) -> Result<ElementId, SrError>,
{
    fn corner_witness(
        &self,
        ring: &Ring,
        e: ElementId,
        a: ElementId,
        t: ElementId,
    ) -> Result<ElementId, SrError> {
        self(ring, e, a, t)
    }
}

/// Is `u` a unit of the corner `eRe`? Scans for a two-sided inverse within
/// the corner.
fn corner_unit_inverse(ring: &Ring, e: ElementId, u: ElementId) -> Option<ElementId> {
    ring.elements().find(|&w| {
        ring.mul(ring.mul(e, w), e) == w && ring.mul(u, w) == e && ring.mul(w, u) == e
    })
}

/// The default corner oracle: ascending scan for `r ∈ eRe` with `a + t·r`
/// invertible within the corner.
pub fn scan_corner_witness(
    ring: &Ring,
    e: ElementId,
    a: ElementId,
    t: ElementId,
) -> Result<ElementId, SrError> {
    ring.elements()
        .filter(|&r| ring.mul(ring.mul(e, r), e) == r)
        .find(|&r| corner_unit_inverse(ring, e, ring.add(a, ring.mul(t, r))).is_some())
        .ok_or_else(|| SrError::OracleContract {
            factor: 0,
            detail: format!(
                "no corner witness for a={}, t={} at e={} in {}",
                ring.format_element(a),
                ring.format_element(t),
                ring.format_element(e),
                ring.id()
            ),
        })
}

/// Certify `a + p + f` against `s` by suspension: a corner witness
/// `r ∈ eRe` for `a` against `e − a(ese)` lifts to the ring unit
/// `u = (a+p+f) + (1 − (a+p+f)s)·r`, whose inverse is assembled from the
/// Peirce components of `u` (a corner unit, an `fRe` leg, and `f`).
pub fn suspend_witness(
    ring: &Ring,
    e: ElementId,
    a: ElementId,
    p: ElementId,
    s: ElementId,
    oracle: &dyn CornerOracle,
) -> Result<WitnessCertificate, SrError> {
    if !ring.is_idempotent(e) {
        return Err(SrError::NotIdempotent {
            element: ring.format_element(e),
        });
    }
    let one = ring.one();
    let f = ring.sub(one, e);
    if ring.mul(ring.mul(e, a), e) != a {
        return Err(SrError::OutsideComponent {
            element: ring.format_element(a),
            component: "eRe",
        });
    }
    if ring.mul(ring.mul(f, p), e) != p {
        return Err(SrError::OutsideComponent {
            element: ring.format_element(p),
            component: "fRe",
        });
    }
    let ese = ring.mul(ring.mul(e, s), e);
    let t_corner = ring.sub(e, ring.mul(a, ese));
    let r = oracle.corner_witness(ring, e, a, t_corner)?;
    if ring.mul(ring.mul(e, r), e) != r {
        return Err(SrError::OutsideComponent {
            element: ring.format_element(r),
            component: "eRe",
        });
    }

    let alpha = ring.add(ring.add(a, p), f);
    let u = ring.add(alpha, ring.mul(ring.sub(one, ring.mul(alpha, s)), r));
    // By the Peirce split of u: eUe = a + (e − a(ese))r (the corner unit the
    // oracle promised), eUf = 0, fUf = f, and fUe is the carried leg.
    let k = ring.mul(ring.mul(e, u), e);
    let q = ring.mul(ring.mul(f, u), e);
    assert_eq!(ring.mul(ring.mul(e, u), f), ring.zero(), "eUf must vanish");
    assert_eq!(ring.mul(ring.mul(f, u), f), f, "fUf must be f");
    assert_eq!(k, ring.add(a, ring.mul(t_corner, r)), "corner unit shape");
    let unit_inverse = jacobson::peirce_inverse(ring, e, k, q, f)?;

    Ok(WitnessCertificate {
        mode: WitnessMode::Form3,
        side: Side::Right,
        variant: VariantKind::Full,
        a: alpha,
        t_or_x: s,
        b: r,
        u,
        unit_inverse,
        path: WitnessPath::Suspension,
    }
    .checked(ring))
}

/// Converse extraction: a ring unit `α` whose Peirce components satisfy
/// `eαf = 0` and `fαf = f` restricts to a unit of the corner: `k = eαe`
/// with inverse `eα⁻¹e`. Returns `(k, k_inverse)`.
pub fn suspension_corner_unit(
    ring: &Ring,
    e: ElementId,
    alpha: ElementId,
) -> Result<(ElementId, ElementId), SrError> {
    if !ring.is_idempotent(e) {
        return Err(SrError::NotIdempotent {
            element: ring.format_element(e),
        });
    }
    let alpha_inv = ring.inverse(alpha).ok_or_else(|| SrError::NotAUnit {
        element: ring.format_element(alpha),
    })?;
    let f = ring.sub(ring.one(), e);
    if ring.mul(ring.mul(e, alpha), f) != ring.zero() {
        return Err(SrError::ShapeMismatch {
            element: ring.format_element(alpha),
            detail: "the eRf component must vanish",
        });
    }
    if ring.mul(ring.mul(f, alpha), f) != f {
        return Err(SrError::ShapeMismatch {
            element: ring.format_element(alpha),
            detail: "the fRf component must equal f",
        });
    }
    let k = ring.mul(ring.mul(e, alpha), e);
    let k_inv = ring.mul(ring.mul(e, alpha_inv), e);
    assert!(
        ring.mul(k, k_inv) == e && ring.mul(k_inv, k) == e,
        "extracted corner unit failed re-verification in {}",
        ring.id()
    );
    Ok((k, k_inv))
}

/// Outcome of reducing the block `[[1,a],[b,c]]` over a base ring to its
/// diagonal datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurReduction {
    /// `c − ba`.
    pub reduced: ElementId,
    /// Stable range one verdict for the block, equal by the reduction to
    /// the verdict for `reduced` in the base ring.
    pub sr_one: bool,
}

/// Reduce `M = [[1,a],[b,c]]` over `base`: conjugating by the elementary
/// blocks `[[1,0],[−b,1]]` and `[[1,−a],[0,1]]` turns `M` into
/// `diag(1, c−ba)`, so the sr verdict for `M` is the verdict for `c−ba`.
pub fn schur_reduce(base: &Ring, a: ElementId, b: ElementId, c: ElementId) -> SchurReduction {
    let reduced = base.sub(c, base.mul(b, a));
    SchurReduction {
        reduced,
        sr_one: has_sr1(base, reduced, Side::Right, VariantKind::Full),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ring(spec: &str) -> Arc<Ring> {
        Ring::parse_spec(spec).expect(spec)
    }

    fn el(r: &Ring, text: &str) -> ElementId {
        r.parse_element(text).expect(text)
    }

    #[test]
    fn full_variant_is_total_on_finite_rings() {
        for spec in ["Z/6", "M(2,Z/2)", "T(2,Z/2)"] {
            let r = ring(spec);
            for a in r.elements() {
                assert!(has_sr1(&r, a, Side::Right, VariantKind::Full), "{spec}#{a} right");
                assert!(has_sr1(&r, a, Side::Left, VariantKind::Full), "{spec}#{a} left");
            }
        }
    }

    #[test]
    fn direct_left_check_matches_the_opposite_ring() {
        for spec in ["Z/6", "T(2,Z/2)", "M(2,Z/2)"] {
            let r = ring(spec);
            for variant in [VariantKind::Full, VariantKind::Unit, VariantKind::Idempotent] {
                for a in r.elements() {
                    for side in [Side::Right, Side::Left] {
                        assert_eq!(
                            has_sr1(&r, a, side, variant),
                            has_sr1_via_opposite(&r, a, side, variant),
                            "{spec}#{a} {} {}",
                            side.label(),
                            variant.label()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn variant_sets_are_ascending_and_pinned() {
        let r = ring("Z/12");
        assert_eq!(variant_set(&r, VariantKind::Unit), vec![1, 5, 7, 11]);
        assert_eq!(variant_set(&r, VariantKind::Square), vec![0, 1, 4, 9]);
        assert_eq!(variant_set(&r, VariantKind::Idempotent), vec![0, 1, 4, 9]);
        for v in VariantKind::ALL {
            let set = variant_set(&r, v);
            assert!(set.windows(2).all(|w| w[0] < w[1]), "{} set sorted", v.label());
            assert!(set.iter().all(|&b| v.admits(&r, b)));
        }
    }

    #[test]
    fn witness_scan_returns_the_first_hit() {
        let r = ring("Z/6");
        let cert = sr1_witness(&r, 2, 1, Side::Right, VariantKind::Full).unwrap();
        assert_eq!(cert.b, 1, "b = 0 gives 2, not a unit; b = 1 gives 1");
        assert_eq!(cert.u, 1);
        assert_eq!(cert.path, WitnessPath::Scan);
        assert_eq!(
            cert.render(&r),
            serde_json::json!({
                "mode": "form3", "side": "right", "variant": "full",
                "a": "2", "t_or_x": "1", "b": "1", "u": "1", "u_inv": "1",
            })
        );
    }

    #[test]
    fn witnesses_respect_their_variant() {
        let r = ring("M(2,Z/2)");
        for a in r.elements() {
            for x in r.elements() {
                for v in VariantKind::ALL {
                    if let Some(cert) = sr1_witness(&r, a, x, Side::Right, v) {
                        assert!(v.admits(&r, cert.b));
                        assert!(cert.verify(&r));
                    }
                }
            }
        }
    }

    #[test]
    fn pair_witness_takes_the_unit_shortcut() {
        let r = ring("Z/6");
        let cert = pair_witness(&r, 5, 3).unwrap();
        assert_eq!(cert.b, 0);
        assert_eq!(cert.u, 5);
        assert_eq!(cert.path, WitnessPath::UnitShortcut);
    }

    #[test]
    fn pair_witness_assembles_idempotents() {
        let r = ring("Z/6");
        // 3·1 + 4·1 = 1, so (x, y) = (1, 1); f = −2 = 4, b = yf = 4,
        // u = 1 − 3·1·4 = 1 − 12 = 1.
        let cert = pair_witness(&r, 3, 4).unwrap();
        assert_eq!(cert.path, WitnessPath::IdempotentAssembly);
        assert_eq!(cert.b, 4);
        assert_eq!(cert.u, 1);

        let m = ring("M(2,Z/2)");
        for &e in m.idempotents() {
            if m.is_unit(e) {
                continue;
            }
            let t = m.sub(m.one(), e);
            let cert = pair_witness(&m, e, t).unwrap();
            assert_eq!(cert.path, WitnessPath::IdempotentAssembly);
        }
    }

    #[test]
    fn pair_witness_covers_every_comaximal_pair() {
        for spec in ["Z/12", "M(2,Z/2)"] {
            let r = ring(spec);
            let mut produced = 0usize;
            for a in r.elements() {
                for t in r.elements() {
                    match pair_witness(&r, a, t) {
                        Ok(cert) => {
                            produced += 1;
                            assert!(cert.verify(&r), "{spec}: a={a} t={t}");
                        }
                        Err(SrError::NotComaximal { .. }) => {
                            assert!(
                                comaximality_evidence(&r, a, t).is_none(),
                                "{spec}: rejected a comaximal pair a={a} t={t}"
                            );
                        }
                        Err(other) => panic!("{spec}: unexpected error {other}"),
                    }
                }
            }
            assert!(produced > 0, "{spec} produced no certificates");
        }
    }

    #[test]
    fn pair_witness_rejects_non_comaximal_inputs() {
        let r = ring("Z/6");
        assert!(matches!(
            pair_witness(&r, 2, 4),
            Err(SrError::NotComaximal { .. })
        ));
    }

    #[test]
    fn chain_path_reroutes_through_form3() {
        let r = ring("Z/6");
        // a = 2 is neither a unit nor idempotent; comaximality hits at
        // (x, y) = (2, 1), the form3 scan at x = 2 finds b₀ = 1, so
        // b = y·b₀ = 1 and u = 2 + 3 = 5.
        let cert = pair_witness(&r, 2, 3).unwrap();
        assert_eq!(cert.path, WitnessPath::Chain);
        assert_eq!((cert.b, cert.u), (1, 5));
    }

    #[test]
    fn product_chain_certifies_without_global_search() {
        let r = ring("Z/6");
        let oracle = &pair_witness as &dyn PairOracle;

        let single = product_witness(&r, &[2], 3, &[oracle]).unwrap();
        assert_eq!(single.b, pair_witness(&r, 2, 3).unwrap().b, "n = 1 delegates");

        let idem2 = product_witness(&r, &[3, 3], 4, &[oracle, oracle]).unwrap();
        assert_eq!(idem2.a, 3, "3·3 = 3 mod 6");
        assert!(idem2.verify(&r));

        let mixed = product_witness(&r, &[5, 2], 3, &[oracle, oracle]).unwrap();
        assert_eq!(mixed.a, 4, "5·2 = 4 mod 6");
        assert!(mixed.verify(&r));
    }

    #[test]
    fn product_chain_handles_matrix_factors() {
        let r = ring("M(2,Z/2)");
        let oracle = &pair_witness as &dyn PairOracle;
        let mut checked = 0usize;
        for a1 in r.elements() {
            for a2 in r.elements() {
                let t = r.sub(r.one(), r.mul(a1, a2));
                match product_witness(&r, &[a1, a2], t, &[oracle, oracle]) {
                    Ok(cert) => {
                        assert_eq!(cert.a, r.mul(a1, a2));
                        checked += 1;
                    }
                    Err(SrError::NotComaximal { .. }) => {}
                    Err(other) => panic!("unexpected error: {other}"),
                }
            }
        }
        assert!(checked > 200, "most pairs are comaximal against 1 − a1a2");
    }

    #[test]
    fn product_chain_propagates_oracle_failures() {
        let r = ring("Z/6");
        let failing = |ring: &Ring, a: ElementId, _t: ElementId| {
            Err(SrError::NotAUnit {
                element: ring.format_element(a),
            })
        };
        let err = product_witness(&r, &[2, 5], 3, &[&failing, &failing]).unwrap_err();
        assert!(matches!(err, SrError::Oracle { factor: 0, .. }));
        assert!(matches!(
            product_witness(&r, &[2, 3], 3, &[&failing, &failing]),
            Err(SrError::NotComaximal { .. })
        ), "2·3 = 0 mod 6 never reaches the oracles");
    }

    #[test]
    fn transport_is_identity_at_one_and_conjugates_units() {
        let r = ring("M(2,Z/2)");
        let e = el(&r, "E11");
        let cert = pair_witness(&r, e, el(&r, "E22")).unwrap();

        let same = transport_witness(&r, &cert, r.one(), r.one()).unwrap();
        assert_eq!((same.a, same.t_or_x, same.b, same.u), (cert.a, cert.t_or_x, cert.b, cert.u));
        assert_eq!(same.variant, cert.variant);

        let swap = el(&r, "[[0,1],[1,0]]");
        let conj = transport_witness(&r, &cert, swap, swap).unwrap();
        assert_eq!(conj.a, el(&r, "E22"), "swap·E11·swap = E22");

        assert!(matches!(
            transport_witness(&r, &cert, el(&r, "E11"), r.one()),
            Err(SrError::NotAUnit { .. })
        ));
    }

    #[test]
    fn transport_moves_form3_certificates() {
        let r = ring("M(2,Z/3)");
        let swap = el(&r, "[[0,1],[1,0]]");
        for a in [el(&r, "E11"), el(&r, "[[1,1],[0,0]]")] {
            for x in [r.zero(), r.one(), swap] {
                let cert = sr1_witness(&r, a, x, Side::Right, VariantKind::Full).unwrap();
                let moved = transport_witness(&r, &cert, swap, r.one()).unwrap();
                assert_eq!(moved.a, r.mul(swap, a));
                assert!(moved.verify(&r));
            }
        }
    }

    #[test]
    fn involutions_flip_certificates_to_the_other_side() {
        let m = ring("M(2,Z/3)");
        let starred = m.with_transpose().unwrap();
        let a = el(&starred, "[[1,2],[0,0]]");
        for x in starred.elements() {
            let cert = sr1_witness(&starred, a, x, Side::Right, VariantKind::Full).unwrap();
            let flipped = involution_transport(&starred, &cert).unwrap();
            assert_eq!(flipped.side, Side::Left);
            assert_eq!(flipped.a, starred.star(a).unwrap());
            assert!(flipped.verify(&starred));
        }
        let plain = ring("Z/6");
        let cert = sr1_witness(&plain, 2, 1, Side::Right, VariantKind::Full).unwrap();
        assert!(involution_transport(&plain, &cert).is_none());
    }

    #[test]
    fn suspension_lifts_corner_witnesses() {
        let r = ring("M(2,Z/4)");
        let e = el(&r, "E11");
        let p = el(&r, "[[0,0],[1,0]]");
        let cert = suspend_witness(&r, e, e, p, r.zero(), &scan_corner_witness).unwrap();
        assert_eq!(cert.u, el(&r, "[[1,0],[1,1]]"), "u = 1 + E21");
        assert_eq!(cert.unit_inverse, el(&r, "[[1,0],[3,1]]"), "inverse 1 − E21");
        assert_eq!(cert.path, WitnessPath::Suspension);

        // p = 0 and a = e: the corner witness is r = 0 and u = 1.
        let trivial = suspend_witness(&r, e, e, r.zero(), r.zero(), &scan_corner_witness).unwrap();
        assert_eq!(trivial.u, r.one());
    }

    #[test]
    fn suspension_exhausts_a_small_ring() {
        let r = ring("M(2,Z/2)");
        for &e in r.idempotents() {
            let f = r.sub(r.one(), e);
            let eres: Vec<_> = r
                .elements()
                .filter(|&a| r.mul(r.mul(e, a), e) == a)
                .collect();
            let fres: Vec<_> = r
                .elements()
                .filter(|&p| r.mul(r.mul(f, p), e) == p)
                .collect();
            for &a in &eres {
                for &p in &fres {
                    for s in r.elements() {
                        let cert = suspend_witness(&r, e, a, p, s, &scan_corner_witness)
                            .unwrap_or_else(|err| {
                                panic!("e={e} a={a} p={p} s={s}: {err}")
                            });
                        assert!(cert.verify(&r));
                        // The lifted unit must satisfy the converse shape,
                        // and its corner part must be a corner unit.
                        let (k, _) = suspension_corner_unit(&r, e, cert.u).unwrap();
                        assert_eq!(k, r.mul(r.mul(e, cert.u), e));
                    }
                }
            }
        }
    }

    #[test]
    fn suspension_rejects_bad_inputs() {
        let r = ring("M(2,Z/2)");
        let e = el(&r, "E11");
        assert!(matches!(
            suspend_witness(&r, el(&r, "E12"), e, r.zero(), r.zero(), &scan_corner_witness),
            Err(SrError::NotIdempotent { .. })
        ));
        assert!(matches!(
            suspend_witness(&r, e, el(&r, "E12"), r.zero(), r.zero(), &scan_corner_witness),
            Err(SrError::OutsideComponent { component: "eRe", .. })
        ));
        assert!(matches!(
            suspend_witness(&r, e, e, el(&r, "E12"), r.zero(), &scan_corner_witness),
            Err(SrError::OutsideComponent { component: "fRe", .. })
        ));
    }

    #[test]
    fn converse_extraction_needs_the_right_shape() {
        let r = ring("M(2,Z/2)");
        let e = el(&r, "E11");
        let upper = el(&r, "[[1,1],[0,1]]");
        assert!(matches!(
            suspension_corner_unit(&r, e, upper),
            Err(SrError::ShapeMismatch { .. })
        ));
        let lower = el(&r, "[[1,0],[1,1]]");
        let (k, k_inv) = suspension_corner_unit(&r, e, lower).unwrap();
        assert_eq!(k, e);
        assert_eq!(k_inv, e);
    }

    #[test]
    fn schur_reduction_matches_block_conjugation() {
        let base = ring("Z/4");
        let m2 = ring("M(2,Z/4)");
        for a in base.elements() {
            for b in base.elements() {
                for c in base.elements() {
                    let red = schur_reduce(&base, a, b, c);
                    assert_eq!(red.reduced, base.sub(c, base.mul(b, a)));
                    assert!(red.sr_one, "finite base rings always give sr 1");
                    let m = el(&m2, &format!("[[1,{a}],[{b},{c}]]"));
                    let l = el(&m2, &format!("[[1,0],[{},1]]", base.neg(b)));
                    let rt = el(&m2, &format!("[[1,{}],[0,1]]", base.neg(a)));
                    let diag = el(&m2, &format!("[[1,0],[0,{}]]", red.reduced));
                    assert_eq!(m2.mul(m2.mul(l, m), rt), diag);
                }
            }
        }
        let z6 = ring("Z/6");
        assert_eq!(schur_reduce(&z6, 0, 0, 5).reduced, 5);
        assert_eq!(schur_reduce(&z6, 1, 1, 1).reduced, 0);
    }
}
