//! Stable range one decisions and the certified witness constructions:
//! direct scans, comaximal pair completion, product chains, unit transport,
//! and the involution push. Every certificate re-verifies before it is
//! returned; this example prints the rendered JSON forms.

use srone::ring::Ring;
use srone::sr::{self, PairOracle, Side, VariantKind};

fn main() {
    let z12 = Ring::parse_spec("Z/12").unwrap();

    // Every element of a finite commutative ring has stable range one; the
    // refined variants can still differ.
    println!("decisions in {}:", z12.id());
    for text in ["0", "4", "6", "7"] {
        let a = z12.parse_element(text).unwrap();
        let full = sr::has_sr1(&z12, a, Side::Right, VariantKind::Full);
        let unit = sr::has_sr1(&z12, a, Side::Right, VariantKind::Unit);
        let idem = sr::has_sr1(&z12, a, Side::Right, VariantKind::Idempotent);
        println!("  a = {text}: full={full} unit={unit} idempotent={idem}");
    }

    // Completing a comaximal pair: 4·Z/12 + 9·Z/12 = Z/12, and 4 is
    // idempotent, so the certificate takes the idempotent-assembly path.
    let a = z12.parse_element("4").unwrap();
    let t = z12.parse_element("9").unwrap();
    let cert = sr::pair_witness(&z12, a, t).unwrap();
    println!();
    println!("pair witness for (4, 9) in Z/12:");
    println!("  {}", cert.render(&z12));
    println!("  path: {:?}, verified: {}", cert.path, cert.verify(&z12));

    // Witness variants restrict where b may come from. At x = 0 the scan
    // needs a + b itself to be a unit with b idempotent.
    let m = Ring::parse_spec("M(2,Z/2)").unwrap();
    let e11 = m.parse_element("[[1,0],[0,0]]").unwrap();
    let x = m.parse_element("[[1,1],[0,1]]").unwrap();
    let scanned = sr::sr1_witness(&m, e11, x, Side::Right, VariantKind::Idempotent).unwrap();
    println!();
    println!("idempotent-variant witness in {}:", m.id());
    println!("  {}", scanned.render(&m));

    // A product of elements is certified against t through one oracle per
    // factor; no global search happens, only the factor oracles run.
    let g1 = m.parse_element("[[1,1],[0,1]]").unwrap();
    let g2 = m.parse_element("[[1,0],[1,1]]").unwrap();
    let tm = m.parse_element("[[0,1],[1,0]]").unwrap();
    let oracle = &sr::pair_witness as &dyn PairOracle;
    let chain = sr::product_witness(&m, &[g1, g2], tm, &[oracle, oracle]).unwrap();
    println!();
    println!("product-chain witness for g1·g2 against t:");
    println!("  {}", chain.render(&m));
    println!("  path: {:?}", chain.path);

    // Transport: the property is invariant under a ↦ u·a·v, and the
    // certificate follows along explicitly.
    let u = m.parse_element("[[0,1],[1,0]]").unwrap();
    let v = m.parse_element("[[1,1],[0,1]]").unwrap();
    let moved = sr::transport_witness(&m, &scanned, u, v).unwrap();
    println!();
    println!("transported to (u·a·v):");
    println!("  {}", moved.render(&m));

    // With an involution the side flips: a right certificate for a becomes
    // a left certificate for a*.
    let starred_ring = m.with_transpose().unwrap();
    let base_cert =
        sr::sr1_witness(&starred_ring, e11, x, Side::Right, VariantKind::Full).unwrap();
    let star_cert = sr::involution_transport(&starred_ring, &base_cert).unwrap();
    println!();
    println!("involution transport (transpose on {}):", starred_ring.id());
    println!("  right: {}", base_cert.render(&starred_ring));
    println!("  left : {}", star_cert.render(&starred_ring));
}
