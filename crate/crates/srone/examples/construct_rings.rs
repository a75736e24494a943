//! Build finite rings from spec strings and poke at their structure:
//! element encoding, units, idempotents, and the derived constructions
//! (products, corners, opposites, quotients).

use srone::ring::Ring;

fn main() {
    for spec in [
        "Z/6",
        "M(2,Z/4)",
        "T(2,Z/3)",
        "Z/2 x Z/4",
        "corner(M(2,Z/2),[[1,0],[0,0]])",
        "op(T(2,Z/2))",
        "quot(Z/12,4)",
    ] {
        let ring = Ring::parse_spec(spec).expect(spec);
        println!(
            "{:<32} order {:>4}, {} units, {} idempotents",
            ring.id(),
            ring.order(),
            ring.units().units.len(),
            ring.idempotents().len(),
        );
    }

    // Element literals follow the ring shape: integers for Z/n, row-major
    // bracket nests for matrix rings, tuples for products.
    let m = Ring::parse_spec("M(2,Z/4)").unwrap();
    let a = m.parse_element("[[1,2],[0,3]]").unwrap();
    let b = m.parse_element("[[0,1],[1,0]]").unwrap();
    println!();
    println!("in {}:", m.id());
    println!("  a       = {}", m.format_element(a));
    println!("  b       = {}", m.format_element(b));
    println!("  a + b   = {}", m.format_element(m.add(a, b)));
    println!("  a * b   = {}", m.format_element(m.mul(a, b)));
    println!("  -a      = {}", m.format_element(m.neg(a)));
    println!(
        "  a^-1    = {}",
        m.inverse(a).map(|i| m.format_element(i)).unwrap_or_else(|| "none".into())
    );

    // The opposite ring reverses multiplication; the element set is shared.
    let op = Ring::opposite(m.clone()).unwrap();
    println!(
        "  in {}: a * b = {}",
        op.id(),
        op.format_element(op.mul(a, b))
    );

    // A Peirce corner eRe is itself a ring with identity e.
    let e = m.parse_element("[[1,0],[0,0]]").unwrap();
    let corner = Ring::corner(&m, e).unwrap();
    println!();
    println!("corner of {} at {}:", m.id(), m.format_element(e));
    println!("  {} with order {}", corner.id(), corner.order());

    // The Peirce split of any element along e.
    let split = m.peirce_split(e).unwrap();
    let [ere, erf, fre, frf] = split.parts(a);
    println!(
        "  peirce parts of a: eae = {}, eaf = {}, fae = {}, faf = {}",
        m.format_element(ere),
        m.format_element(erf),
        m.format_element(fre),
        m.format_element(frf),
    );

    // Quotients collapse a two-sided ideal; class_of in the ring kind maps
    // base elements to classes.
    let z12 = Ring::parse_spec("Z/12").unwrap();
    let four = z12.parse_element("4").unwrap();
    let q = Ring::quotient(&z12, &[four]).unwrap();
    println!();
    println!("{} has order {}", q.id(), q.order());

    // Parse errors carry the byte offset of the offending token.
    let broken = Ring::parse_spec("M(2 Z/4");
    println!();
    println!("parsing \"M(2 Z/4\": {}", broken.unwrap_err());
}
