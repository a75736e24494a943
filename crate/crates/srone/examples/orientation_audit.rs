//! The block-orientation audit: [[1,a],[b,c]] versus [[1,b],[a,c]] for
//! a = E12, b = E11, c = 2E21 as 4x4 integer matrices. The determinant
//! criterion and the Schur reduction are computed for both orientations and
//! must agree; the verdict is derived rather than assumed, because the two
//! labelings are easy to swap silently.

use srone::intmat;

fn main() {
    let audit = intmat::audit_6_12();

    for side in &audit.sides {
        println!("{}", side.label);
        println!("  matrix           {}", side.matrix);
        println!("  det              {}", side.det);
        println!("  sr by det        {}", side.det_criterion_sr_one);
        println!("  schur complement {}", side.schur_complement);
        println!("  schur det        {}", side.schur_det);
        println!("  sr by schur      {}", side.schur_criterion_sr_one);
        println!();
    }

    println!("criteria agree on both sides: {}", audit.criteria_agree);
    println!(
        "orientation with stable range one: {}",
        audit.sr_one_label.as_deref().unwrap_or("none")
    );
    println!();
    println!("{}", audit.note);

    assert!(audit.criteria_agree);
    assert!(audit.sr_one_label.is_some());
}
