// Heegner points on the conductor-37 curve: sum the modular
// parametrization over a full class-group orbit of CM points, map the
// resulting complex number through the Weierstrass functions, and snap
// to exact rational coordinates. The heights of the points produced
// this way track L'(E, 1) across discriminants; the final table shows
// that ratio holding steady.

use mordell::heegner::{gross_zagier_scan, heegner_point, ratio_spread};
use mordell::registry::Registry;

fn main() -> mordell::Result<()> {
    let reg = Registry::builtin();
    let e = &reg.get("rank1-37").unwrap().curve;

    for d in [-7, -11, -47] {
        let tr = heegner_point(e, 37, d)?;
        println!("D = {d} (class number {})", tr.class_number);
        println!("  z = {:.10} + {:.10} i", tr.z.re, tr.z.im);
        // Weierstrass coordinates land on the short model first
        println!("  short-model x = {:.10}, y = {:.10}", tr.x.re, tr.y.re);
        match &tr.point {
            Some(p) => println!("  snapped to {p}, residual {:.2e}", tr.residual),
            None => println!("  no rational snap at this tolerance"),
        }
        println!();
    }

    println!("height vs twisted central value across discriminants:");
    let rows = gross_zagier_scan(e, 37, &[-3, -7, -11, -47])?;
    println!(
        "{:>5} {:>3} {:>12} {:>12} {:>12}",
        "D", "h", "h(P_D)", "L'L(D)", "ratio"
    );
    for r in &rows {
        println!(
            "{:>5} {:>3} {:>12.6} {:>12.6} {:>12.4}",
            r.d, r.class_number, r.height, r.l_twist, r.ratio
        );
    }
    println!("relative spread of the ratios: {:.3e}", ratio_spread(&rows));
    Ok(())
}
