//! Classify every element of a small ring, then aggregate the ring-level
//! predicates that the element classes determine.

use srone::classify::{self, ClassificationFlags};
use srone::ring::Ring;

fn short(flags: &ClassificationFlags) -> String {
    let mut tags: Vec<String> = Vec::new();
    if flags.unit {
        tags.push("unit".into());
    }
    if flags.idempotent {
        tags.push("idem".into());
    }
    if let Some(n) = flags.nilpotent {
        tags.push(format!("nil^{n}"));
    }
    if flags.regular {
        tags.push("reg".into());
    }
    if flags.unit_regular {
        tags.push("ureg".into());
    }
    if flags.strongly_regular {
        tags.push("sreg".into());
    }
    if flags.clean {
        tags.push("clean".into());
    }
    if flags.in_radical {
        tags.push("rad".into());
    }
    tags.join(" ")
}

fn main() {
    let z12 = Ring::parse_spec("Z/12").unwrap();
    println!("elements of {}:", z12.id());
    for a in z12.elements() {
        let flags = classify::classify(&z12, a);
        println!("  {:>2}  {}", z12.format_element(a), short(&flags));
    }

    // The triangular ring separates classes that coincide in Z/n: E12 is
    // nilpotent yet not regular there.
    let t = Ring::parse_spec("T(2,Z/2)").unwrap();
    let e12 = t.parse_element("[[0,1],[0,0]]").unwrap();
    let flags = classify::classify(&t, e12);
    println!();
    println!("{} in {}: {}", t.format_element(e12), t.id(), short(&flags));
    println!("  regular: {}", flags.regular);
    println!("  strongly nilpotent: {}", flags.strongly_nilpotent);
    println!(
        "  inner inverses: {:?}",
        classify::inner_inverses(&t, e12)
            .iter()
            .map(|&x| t.format_element(x))
            .collect::<Vec<_>>()
    );

    // A regular element and its reflexive inverses in a matrix ring.
    let m = Ring::parse_spec("M(2,Z/2)").unwrap();
    let e11 = m.parse_element("[[1,0],[0,0]]").unwrap();
    let reflexive = classify::reflexive_inverses(&m, e11);
    println!();
    println!(
        "reflexive inverses of {} in {}: {}",
        m.format_element(e11),
        m.id(),
        reflexive.len()
    );

    // The radical of the triangular ring is the strictly upper corner.
    let rad = classify::radical(&t);
    println!();
    println!(
        "radical of {}: {:?}",
        t.id(),
        rad.iter().map(|&x| t.format_element(x)).collect::<Vec<_>>()
    );

    println!();
    for spec in ["Z/6", "Z/8", "M(2,Z/2)", "T(2,Z/2)"] {
        let ring = Ring::parse_spec(spec).unwrap();
        let p = classify::ring_predicates(&ring);
        println!(
            "{:<10} exchange={} ic={} abelian={} reg_closed={} sr1={} clean={}",
            ring.id(),
            p.exchange,
            p.ic,
            p.abelian,
            p.reg_closed,
            p.stable_range_one,
            p.clean_ring,
        );
    }
}
