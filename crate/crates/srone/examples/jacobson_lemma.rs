//! The circle-operation toolkit: the symmetry of `a + b − axb` versus
//! `a + b − bxa` across element classes, where it breaks, the four-window
//! equivalence, and certified block inversion.

use srone::jacobson::{self, Block2, ElementClass};
use srone::ring::Ring;

fn main() {
    let m = Ring::parse_spec("M(2,Z/2)").unwrap();

    // The two mirror products land in the same class for units, regular,
    // and unit-regular elements, at every conductor x.
    let a = m.parse_element("[[1,1],[0,0]]").unwrap();
    let b = m.parse_element("[[0,0],[1,1]]").unwrap();
    let x = m.parse_element("[[1,0],[1,1]]").unwrap();
    println!("symmetry at one triple of {}:", m.id());
    for class in [ElementClass::Unit, ElementClass::Regular, ElementClass::UnitRegular] {
        let (axb, bxa) = jacobson::sjl_check(&m, a, b, x, class);
        println!("  {:<4}  a+b-axb: {axb:<5}  a+b-bxa: {bxa}", class.label());
    }

    // The strongly regular class is the exception; searching M(2,Z/4)
    // turns up triples where the two sides disagree.
    let m4 = Ring::parse_spec("M(2,Z/4)").unwrap();
    let a4 = m4.parse_element("[[1,1],[0,0]]").unwrap();
    let b4 = m4.parse_element("[[1,0],[0,0]]").unwrap();
    let x4 = m4.parse_element("[[0,1],[1,0]]").unwrap();
    let (sreg_axb, sreg_bxa) = jacobson::sjl_check(&m4, a4, b4, x4, ElementClass::StronglyRegular);
    println!();
    println!("strongly regular asymmetry in {}:", m4.id());
    println!("  a+b-axb strongly regular: {sreg_axb}");
    println!("  a+b-bxa strongly regular: {sreg_bxa}");
    assert_ne!(sreg_axb, sreg_bxa, "the asymmetry is the point");

    // The circle operation a ∘ b = a + b − axb is an associative monoid
    // with identity 0 at every conductor.
    let ctx = jacobson::CircleContext::new(&m, x);
    let c = m.parse_element("[[0,1],[1,0]]").unwrap();
    let left = ctx.circle(ctx.circle(a, b), c);
    let right = ctx.circle(a, ctx.circle(b, c));
    println!();
    println!("circle associativity: (a∘b)∘c = {}", m.format_element(left));
    println!("                      a∘(b∘c) = {}", m.format_element(right));
    assert_eq!(left, right);
    assert_eq!(ctx.triple_expansion(a, b, c), left);

    // Block inversion through the Schur complement: for [[u,q],[p,r]] with
    // u a unit, membership in a class is read off r − p·u⁻¹·q, and for the
    // unit class the inverse blocks are assembled and re-verified.
    let blk = Block2 {
        u: m.parse_element("[[1,1],[0,1]]").unwrap(),
        q: m.parse_element("[[1,0],[0,0]]").unwrap(),
        p: m.parse_element("[[0,0],[1,0]]").unwrap(),
        r: m.parse_element("[[1,0],[0,1]]").unwrap(),
    };
    let verdict = jacobson::banachiewicz(&m, blk, ElementClass::Unit).unwrap();
    println!();
    println!("block [[u,q],[p,r]] over {}:", m.id());
    println!("  schur complement: {}", m.format_element(verdict.schur));
    println!("  block is a unit: {}", verdict.in_class);
    if let Some(inv) = verdict.inverse {
        println!(
            "  inverse blocks: u'={} q'={} p'={} r'={}",
            m.format_element(inv.u),
            m.format_element(inv.q),
            m.format_element(inv.p),
            m.format_element(inv.r),
        );
    }

    // The four-window equivalence at (a, x), with the commutator
    // decompositions that drop out when all four expressions are units.
    let verdict = jacobson::prop36_check(&m, a, x, ElementClass::Unit);
    println!();
    println!("four windows at (a, x): {:?}", verdict.memberships);
    if let Some(decs) = verdict.decompositions {
        for d in decs {
            println!(
                "  {} = {} + {}",
                m.format_element(d.target),
                m.format_element(d.left),
                m.format_element(d.right),
            );
        }
    }
}
