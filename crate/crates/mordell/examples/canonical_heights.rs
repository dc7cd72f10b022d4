// Canonical heights by the doubling limit h(2^k P) / 4^k with local
// corrections, the bilinear height pairing, and regulators of the
// registry generators.

use mordell::curve::Point;
use mordell::heights::{canonical_height, height_pairing, regulator};
use mordell::registry::Registry;

fn main() -> mordell::Result<()> {
    let reg = Registry::builtin();

    let e37 = reg.get("rank1-37").unwrap();
    let p = Point::from_ints(0, 0);
    let h = canonical_height(&e37.curve, &p)?;
    println!("{}", e37.curve);
    println!("  h((0, 0)) = {h:.12}");

    // quadraticity: h(nP) = n^2 h(P)
    for n in [2, 3, 5] {
        let np = e37.curve.mul(n, &p)?;
        let hn = canonical_height(&e37.curve, &np)?;
        println!(
            "  h({n}P) = {hn:.12}  /{}^2 = {:.12}",
            n,
            hn / (n * n) as f64
        );
    }
    println!();

    // the parallelogram law pins the pairing down
    let e389 = reg.get("rank2-389").unwrap();
    let [p1, p2] = [&e389.generators[0], &e389.generators[1]];
    let sum = e389.curve.add(p1, p2)?;
    let diff = e389.curve.add(p1, &e389.curve.neg(p2))?;
    let lhs = canonical_height(&e389.curve, &sum)? + canonical_height(&e389.curve, &diff)?;
    let rhs = 2.0 * canonical_height(&e389.curve, p1)? + 2.0 * canonical_height(&e389.curve, p2)?;
    println!("{}", e389.curve);
    println!("  parallelogram defect: {:.2e}", (lhs - rhs).abs());
    println!(
        "  <P1, P2> = {:.12}",
        height_pairing(&e389.curve, p1, p2)?
    );
    println!(
        "  regulator = {:.12}",
        regulator(&e389.curve, &e389.generators)?
    );
    println!();

    let e5077 = reg.get("rank3-5077").unwrap();
    println!("{}", e5077.curve);
    println!(
        "  rank-3 regulator = {:.12}",
        regulator(&e5077.curve, &e5077.generators)?
    );
    Ok(())
}
