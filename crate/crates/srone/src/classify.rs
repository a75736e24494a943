//! Element-wise ring classes and ring-level predicates.
//!
//! Every decision in this module comes straight from the defining first-order
//! formula, evaluated by bounded search over a finite ring: "there exists x"
//! is a loop, "for all s" is a loop, and nothing smarter is attempted. That
//! keeps each flag independently auditable against its definition, which is
//! the whole point of running these classifications as oracles for the
//! theorem suite.
//!
//! The classes covered per element: unit, idempotent, nilpotent (with least
//! index), (von Neumann) regular, unit-regular, strongly regular, strongly
//! nilpotent (Levitzki), quasi-nilpotent, suitable, clean, strongly
//! pi-regular, and membership in the Jacobson radical. Ring-level predicates
//! aggregate those over all elements: exchange, IC, abelian, reg-closed,
//! stable range one, clean.

use serde::Serialize;

use crate::ring::{ElementId, Ring};
use crate::sr::{self, Side, VariantKind};

/// Every element-wise class we track, decided for a single element.
///
/// `nilpotent` carries the least `n >= 1` with `a^n = 0` when one exists.
/// All other fields are plain memberships.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub unit: bool,
    pub idempotent: bool,
    pub nilpotent: Option<u32>,
    pub regular: bool,
    pub unit_regular: bool,
    pub strongly_regular: bool,
    pub strongly_nilpotent: bool,
    pub quasi_nilpotent: bool,
    pub suitable: bool,
    pub clean: bool,
    pub strongly_pi_regular: bool,
    pub in_radical: bool,
}

/// Ring-level predicates computed by exhausting the element classifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RingPredicates {
    /// Every element is suitable.
    pub exchange: bool,
    /// The regular and unit-regular element sets coincide.
    pub ic: bool,
    /// Every idempotent is central.
    pub abelian: bool,
    /// The regular elements are closed under multiplication.
    pub reg_closed: bool,
    /// Every element has (right, equivalently left) stable range one.
    pub stable_range_one: bool,
    /// Every element is the sum of an idempotent and a unit.
    pub clean_ring: bool,
}

/// `a` is regular when `a = axa` for some `x`.
pub fn is_regular(ring: &Ring, a: ElementId) -> bool {
    ring.elements().any(|x| ring.mul(ring.mul(a, x), a) == a)
}

/// `a` is unit-regular when `a = aua` for some unit `u`.
pub fn is_unit_regular(ring: &Ring, a: ElementId) -> bool {
    ring.units()
        .units
        .iter()
        .any(|&u| ring.mul(ring.mul(a, u), a) == a)
}

/// `a` is strongly regular when `a` lies in both `a²R` and `Ra²`.
pub fn is_strongly_regular(ring: &Ring, a: ElementId) -> bool {
    let a2 = ring.mul(a, a);
    ring.elements().any(|x| ring.mul(a2, x) == a) && ring.elements().any(|x| ring.mul(x, a2) == a)
}

/// Least `n >= 1` with `a^n = 0`, if any. The search stops at the ring
/// order: the powers of `a` take at most `|R|` distinct values, so a zero
/// power shows up within that many steps or never.
fn nilpotency_index(ring: &Ring, a: ElementId) -> Option<u32> {
    let mut power = a;
    for n in 1..=ring.order() {
        if power == ring.zero() {
            return Some(n as u32);
        }
        power = ring.mul(power, a);
    }
    None
}

/// `1 - as` is a unit for every `s` commuting with `a`.
fn is_quasi_nilpotent(ring: &Ring, a: ElementId) -> bool {
    let one = ring.one();
    ring.elements().all(|s| {
        ring.mul(a, s) != ring.mul(s, a) || ring.is_unit(ring.sub(one, ring.mul(a, s)))
    })
}

/// `1 - ax` is a unit for every `x`; this is radical membership, element by
/// element.
fn in_radical(ring: &Ring, a: ElementId) -> bool {
    let one = ring.one();
    ring.elements()
        .all(|x| ring.is_unit(ring.sub(one, ring.mul(a, x))))
}

/// `a^n` lies in `a^(n+1)R ∩ Ra^(n+1)` for some `n` at most the ring order.
fn is_strongly_pi_regular(ring: &Ring, a: ElementId) -> bool {
    let mut pn = a;
    for _ in 1..=ring.order() {
        let pn1 = ring.mul(pn, a);
        if ring.elements().any(|x| ring.mul(pn1, x) == pn)
            && ring.elements().any(|x| ring.mul(x, pn1) == pn)
        {
            return true;
        }
        pn = pn1;
    }
    false
}

/// Decide whether every Levitzki sequence out of `a` dies: `a₁ = a`,
/// `aₖ₊₁ = aₖ r aₖ` for adversarially chosen `r`. In a finite ring an
/// infinite non-vanishing sequence must revisit a value, so the question
/// reduces to cycle detection in the successor graph `s → t` for
/// `t ∈ sRs \ {0}`: `a` is strongly nilpotent iff no cycle is reachable
/// from it.
pub fn is_strongly_nilpotent(ring: &Ring, a: ElementId) -> bool {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;

    fn reaches_cycle(ring: &Ring, s: ElementId, color: &mut [u8]) -> bool {
        color[s] = GRAY;
        for r in ring.elements() {
            let t = ring.mul(ring.mul(s, r), s);
            if t == ring.zero() {
                continue;
            }
            match color[t] {
                GRAY => return true,
                WHITE => {
                    if reaches_cycle(ring, t, color) {
                        return true;
                    }
                }
                _ => {}
            }
        }
        color[s] = BLACK;
        false
    }

    if a == ring.zero() {
        return true;
    }
    let mut color = vec![WHITE; ring.order()];
    !reaches_cycle(ring, a, &mut color)
}

/// `a` is suitable when some idempotent `e ∈ aR` has `1 - e ∈ (1-a)R`.
pub fn is_suitable(ring: &Ring, a: ElementId) -> bool {
    let one = ring.one();
    let t = ring.sub(one, a);
    let mut in_ar = vec![false; ring.order()];
    let mut in_tr = vec![false; ring.order()];
    for r in ring.elements() {
        in_ar[ring.mul(a, r)] = true;
        in_tr[ring.mul(t, r)] = true;
    }
    ring.idempotents()
        .iter()
        .any(|&e| in_ar[e] && in_tr[ring.sub(one, e)])
}

fn is_clean(ring: &Ring, a: ElementId) -> bool {
    ring.idempotents()
        .iter()
        .any(|&e| ring.is_unit(ring.sub(a, e)))
}

/// Classify one element against every tracked class.
pub fn classify(ring: &Ring, a: ElementId) -> ClassificationFlags {
    ClassificationFlags {
        unit: ring.is_unit(a),
        idempotent: ring.is_idempotent(a),
        nilpotent: nilpotency_index(ring, a),
        regular: is_regular(ring, a),
        unit_regular: is_unit_regular(ring, a),
        strongly_regular: is_strongly_regular(ring, a),
        strongly_nilpotent: is_strongly_nilpotent(ring, a),
        quasi_nilpotent: is_quasi_nilpotent(ring, a),
        suitable: is_suitable(ring, a),
        clean: is_clean(ring, a),
        strongly_pi_regular: is_strongly_pi_regular(ring, a),
        in_radical: in_radical(ring, a),
    }
}

/// All `x` with `a = axa`, in ascending index order.
pub fn inner_inverses(ring: &Ring, a: ElementId) -> Vec<ElementId> {
    ring.elements()
        .filter(|&x| ring.mul(ring.mul(a, x), a) == a)
        .collect()
}

/// All `y` with `a = aya` and `y = yay`, in ascending index order.
pub fn reflexive_inverses(ring: &Ring, a: ElementId) -> Vec<ElementId> {
    ring.elements()
        .filter(|&y| ring.mul(ring.mul(a, y), a) == a && ring.mul(ring.mul(y, a), y) == y)
        .collect()
}

/// The Jacobson radical: all `b` with `1 - bx` a unit for every `x`.
///
/// The result is re-checked to be a two-sided ideal before it is returned;
/// a failure there would mean the unit table itself is wrong.
pub fn radical(ring: &Ring) -> Vec<ElementId> {
    let rad: Vec<ElementId> = ring.elements().filter(|&b| in_radical(ring, b)).collect();
    let mut member = vec![false; ring.order()];
    for &b in &rad {
        member[b] = true;
    }
    for &b in &rad {
        for r in ring.elements() {
            assert!(
                member[ring.mul(b, r)] && member[ring.mul(r, b)],
                "radical of {} is not closed under multiplication by {}",
                ring.id(),
                ring.format_element(r)
            );
        }
        for &c in &rad {
            assert!(
                member[ring.add(b, c)],
                "radical of {} is not additively closed",
                ring.id()
            );
        }
    }
    rad
}

/// Aggregate the element classifications into ring-level predicates.
pub fn ring_predicates(ring: &Ring) -> RingPredicates {
    let mut reg = vec![false; ring.order()];
    let mut ureg = vec![false; ring.order()];
    let mut exchange = true;
    let mut clean_ring = true;
    let mut stable_range_one = true;
    for a in ring.elements() {
        reg[a] = is_regular(ring, a);
        ureg[a] = is_unit_regular(ring, a);
        exchange = exchange && is_suitable(ring, a);
        clean_ring = clean_ring && is_clean(ring, a);
        stable_range_one =
            stable_range_one && sr::has_sr1(ring, a, Side::Right, VariantKind::Full);
    }
    let regulars: Vec<ElementId> = ring.elements().filter(|&a| reg[a]).collect();
    let reg_closed = regulars
        .iter()
        .all(|&a| regulars.iter().all(|&b| reg[ring.mul(a, b)]));
    let abelian = ring
        .idempotents()
        .iter()
        .all(|&e| ring.elements().all(|r| ring.mul(e, r) == ring.mul(r, e)));
    RingPredicates {
        exchange,
        ic: reg == ureg,
        abelian,
        reg_closed,
        stable_range_one,
        clean_ring,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use std::sync::Arc;

    fn ring(spec: &str) -> Arc<Ring> {
        Ring::parse_spec(spec).expect(spec)
    }

    fn el(r: &Ring, text: &str) -> ElementId {
        r.parse_element(text).expect(text)
    }

    #[test]
    fn units_carry_every_regularity_flag() {
        for spec in ["Z/6", "M(2,Z/2)"] {
            let r = ring(spec);
            for &u in &r.units().units {
                let c = classify(&r, u);
                assert!(
                    c.unit && c.regular && c.unit_regular && c.strongly_regular && c.clean,
                    "unit {} in {spec} missing a flag: {c:?}",
                    r.format_element(u)
                );
            }
        }
    }

    #[test]
    fn two_e11_mod_four_is_not_regular() {
        // The only candidate equations 2 = 2x11·2 die mod 4, and the scan
        // confirms no inner inverse exists at all.
        let r = ring("M(2,Z/4)");
        let a = el(&r, "[[2,0],[0,0]]");
        assert!(!is_regular(&r, a));
        assert!(inner_inverses(&r, a).is_empty());
    }

    #[test]
    fn two_in_z4_is_radical_nilpotent_quasi_nilpotent() {
        let r = ring("Z/4");
        let c = classify(&r, 2);
        assert!(c.in_radical);
        assert_eq!(c.nilpotent, Some(2));
        assert!(c.quasi_nilpotent);
        assert!(!c.unit && !c.regular);
    }

    #[test]
    fn unit_regular_but_not_strongly_regular_mod_four() {
        // b = [[2,1],[0,0]] satisfies b² = 2b, so b ∉ b²R; yet the swap
        // matrix u = [[0,1],[1,0]] is a unit inner inverse: bub = b.
        let r = ring("M(2,Z/4)");
        let b = el(&r, "[[2,1],[0,0]]");
        let u = el(&r, "[[0,1],[1,0]]");
        assert_eq!(ring_mul3(&r, b, u, b), b, "bub must reproduce b");
        assert!(r.is_unit(u));
        let c = classify(&r, b);
        assert!(c.unit_regular);
        assert!(!c.strongly_regular);
        assert_eq!(r.mul(b, b), r.mul(el(&r, "[[2,0],[0,2]]"), b), "b² = 2b");
    }

    fn ring_mul3(r: &Ring, a: ElementId, b: ElementId, c: ElementId) -> ElementId {
        r.mul(r.mul(a, b), c)
    }

    #[test]
    fn radicals_are_pinned() {
        let cases: [(&str, &[&str]); 4] = [
            ("Z/4", &["0", "2"]),
            ("Z/12", &["0", "6"]),
            ("M(2,Z/2)", &["[[0,0],[0,0]]"]),
            ("T(2,Z/2)", &["[[0,0],[0,0]]", "[[0,1],[0,0]]"]),
        ];
        for (spec, expect) in cases {
            let r = ring(spec);
            let mut want: Vec<ElementId> = expect.iter().map(|t| el(&r, t)).collect();
            want.sort_unstable();
            assert_eq!(radical(&r), want, "radical of {spec}");
        }
    }

    #[test]
    fn strong_nilpotence_sees_the_triangular_difference() {
        // In T(2,Z/2) every product E12·t·E12 is zero, so the successor
        // graph at E12 has no edges; in M(2,Z/2) the detour through E21
        // gives E12 = E12·E21·E12, a self-loop.
        let t = ring("T(2,Z/2)");
        let m = ring("M(2,Z/2)");
        assert!(is_strongly_nilpotent(&t, el(&t, "E12")));
        assert!(!is_strongly_nilpotent(&m, el(&m, "E12")));
        assert!(is_strongly_nilpotent(&t, t.zero()));
        assert!(is_strongly_nilpotent(&m, m.zero()));
    }

    #[test]
    fn inner_inverse_sets_match_their_definitions() {
        let m = ring("M(2,Z/2)");
        let e12 = el(&m, "E12");
        assert!(inner_inverses(&m, e12).contains(&el(&m, "E21")));
        assert_eq!(inner_inverses(&m, m.zero()).len(), m.order());
        for &e in m.idempotents() {
            assert!(inner_inverses(&m, e).contains(&e), "e ∈ inner(e) for idempotents");
        }
    }

    #[test]
    fn reflexive_inverse_sets_are_exact() {
        let z6 = ring("Z/6");
        assert_eq!(reflexive_inverses(&z6, 5), vec![5], "5⁻¹ = 5 and nothing else");
        assert_eq!(reflexive_inverses(&z6, 0), vec![0]);

        // A unit inner inverse u of a gives the reflexive inverse uau.
        let r = ring("M(2,Z/4)");
        let b = el(&r, "[[2,1],[0,0]]");
        let u = el(&r, "[[0,1],[1,0]]");
        let ubu = ring_mul3(&r, u, b, u);
        assert!(reflexive_inverses(&r, b).contains(&ubu));
    }

    #[test]
    fn class_inclusions_hold_exhaustively() {
        for spec in ["Z/12", "M(2,Z/2)", "M(2,Z/3)", "T(2,Z/3)"] {
            let r = ring(spec);
            let commutative = r
                .elements()
                .all(|a| r.elements().all(|b| r.mul(a, b) == r.mul(b, a)));
            for a in r.elements() {
                let c = classify(&r, a);
                if c.unit || c.idempotent {
                    assert!(c.regular && c.unit_regular && c.strongly_regular, "{spec}#{a}");
                }
                if c.strongly_regular {
                    assert!(c.unit_regular, "{spec}#{a}: sreg ⊆ ureg");
                }
                if c.unit_regular {
                    assert!(c.regular, "{spec}#{a}: ureg ⊆ reg");
                }
                if c.strongly_nilpotent {
                    assert!(c.nilpotent.is_some(), "{spec}#{a}: strongly nilpotent ⇒ nilpotent");
                    assert!(c.in_radical, "{spec}#{a}: strongly nilpotent ⇒ radical");
                }
                if commutative {
                    assert_eq!(
                        c.strongly_nilpotent,
                        c.nilpotent.is_some(),
                        "{spec}#{a}: the notions collapse in commutative rings"
                    );
                }
            }
        }
    }

    #[test]
    fn suitability_examples() {
        let z4 = ring("Z/4");
        assert!(z4.elements().all(|a| is_suitable(&z4, a)));
        let z6 = ring("Z/6");
        assert!(is_suitable(&z6, 3), "3 is its own witnessing idempotent");
        for spec in ["Z/6", "M(2,Z/2)", "T(2,Z/2)"] {
            let r = ring(spec);
            for &e in r.idempotents() {
                assert!(is_suitable(&r, e));
            }
        }
    }

    #[test]
    fn ring_predicate_oracles() {
        let m = ring_predicates(&ring("M(2,Z/2)"));
        assert!(m.ic && m.exchange && m.stable_range_one);
        assert!(!m.abelian, "E11 does not commute with E12");

        let z6 = ring_predicates(&ring("Z/6"));
        assert!(z6.abelian && z6.ic && z6.reg_closed && z6.clean_ring);

        let t = ring_predicates(&ring("T(2,Z/2)"));
        assert!(t.exchange);
        assert!(!t.abelian, "E11·E12 = E12 but E12·E11 = 0");
    }

    #[test]
    fn zero_ring_classifies_without_panicking() {
        let m = ring("M(2,Z/2)");
        let zero_ring = Ring::corner(&m, m.zero()).unwrap();
        let c = classify(&zero_ring, 0);
        assert!(c.unit && c.idempotent && c.in_radical);
        assert_eq!(c.nilpotent, Some(1));
        assert_eq!(radical(&zero_ring), vec![0]);
        let p = ring_predicates(&zero_ring);
        assert!(p.exchange && p.ic && p.stable_range_one && p.clean_ring);
    }
}
