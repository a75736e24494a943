//! Corner-to-ring witness transfer: a stable-range-one witness found inside
//! a Peirce corner eRe lifts to a unit of the whole ring, and conversely a
//! suitably shaped ring unit restricts to a corner unit.

use srone::ring::Ring;
use srone::sr::{self, CornerOracle};

fn main() {
    let m = Ring::parse_spec("M(2,Z/4)").unwrap();
    let e = m.parse_element("[[1,0],[0,0]]").unwrap();
    let f = m.sub(m.one(), e);

    // The corner at E11 is a copy of Z/4 sitting inside the matrix ring.
    let corner = Ring::corner(&m, e).unwrap();
    println!("corner of {} at {}: order {}", m.id(), m.format_element(e), corner.order());

    // Take a = 2·E11 (the corner's two), a leg p = E21 in fRe, and the
    // conductor s = 0, so the corner pair becomes (a, e).
    let a = m.parse_element("[[2,0],[0,0]]").unwrap();
    let p = m.parse_element("[[0,0],[1,0]]").unwrap();
    let s = m.zero();

    // The corner witness is found by an ascending scan over eRe; any other
    // oracle with the same contract would do.
    let scan = |ring: &Ring, e, a, t| sr::scan_corner_witness(ring, e, a, t);
    let r = sr::scan_corner_witness(&m, e, a, m.sub(e, m.mul(a, m.mul(m.mul(e, s), e)))).unwrap();
    println!();
    println!("corner witness r = {} (lives in eRe)", m.format_element(r));

    // Suspension: the witness lifts to a certificate for a + p + f against
    // s, with the unit's inverse assembled from Peirce components.
    let alpha = m.add(m.add(a, p), f);
    let cert = sr::suspend_witness(&m, e, a, p, s, &scan as &dyn CornerOracle).unwrap();
    assert_eq!(cert.a, alpha);
    println!();
    println!("suspended element a + p + f = {}", m.format_element(alpha));
    println!("suspended certificate:");
    println!("  {}", cert.render(&m));
    println!("  path: {:?}", cert.path);
    assert!(cert.verify(&m));

    // Converse: the produced unit has vanishing eRf part and fRf part f, so
    // it hands back a unit of the corner.
    let (k, k_inv) = sr::suspension_corner_unit(&m, e, cert.u).unwrap();
    println!();
    println!(
        "extracted corner unit k = {} with k^-1 = {} (k·k^-1 = {})",
        m.format_element(k),
        m.format_element(k_inv),
        m.format_element(m.mul(k, k_inv)),
    );

    // The same transfer drives the block reduction [[1,a],[b,c]] ↦ c − ba
    // over any base ring: the block has stable range one exactly when the
    // reduced element does.
    let z6 = Ring::parse_spec("Z/6").unwrap();
    let (ba, bb, bc) = (
        z6.parse_element("2").unwrap(),
        z6.parse_element("3").unwrap(),
        z6.parse_element("5").unwrap(),
    );
    let reduction = sr::schur_reduce(&z6, ba, bb, bc);
    println!();
    println!(
        "block [[1,{}],[{},{}]] over {} reduces to {} (sr-one: {})",
        z6.format_element(ba),
        z6.format_element(bb),
        z6.format_element(bc),
        z6.id(),
        z6.format_element(reduction.reduced),
        reduction.sr_one,
    );
}
