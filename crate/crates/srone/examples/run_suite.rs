//! Drive the verification suite from code: pick theorems by selector, run
//! them over a ring list, and read the machine-readable reports. Then ask
//! the counterexample hunters for the structured finds.

use srone::ring::Ring;
use srone::suite;

fn main() {
    // Selectors expand to catalog ids: exact names, prefixes, or families.
    let ids = suite::expand_selector("L3.2").unwrap();
    println!("L3.2 expands to {ids:?}");

    let rings = vec![
        Ring::parse_spec("Z/6").unwrap(),
        Ring::parse_spec("M(2,Z/2)").unwrap(),
    ];
    let reports = suite::run_suite(&rings, &ids, suite::default_budget()).unwrap();
    println!();
    println!("{:<26} {:<10} {:>9}  outcome", "theorem", "ring", "instances");
    for r in &reports {
        println!(
            "{:<26} {:<10} {:>9}  {}",
            r.theorem,
            r.ring,
            r.instances,
            r.outcome.label()
        );
    }
    assert!(!suite::any_fail(&reports));

    // Integer-side cells run without any registry ring.
    let reports = suite::run_suite(&[], &["E2.9", "T7.1"], suite::default_budget()).unwrap();
    println!();
    for r in &reports {
        println!("{} on {}: {} ({} instances)", r.theorem, r.ring, r.outcome.label(), r.instances);
    }

    // The hunters return the structured finds behind the famous
    // counterexamples, re-verified before being reported.
    for kind in ["sreg-asymmetry", "trace-mismatch", "sreg-product", "sr1-not-regular"] {
        let payload = suite::find_counterexamples(kind).unwrap();
        println!();
        println!("{kind}:");
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    }
}
