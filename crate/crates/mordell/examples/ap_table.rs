// Reduction data for the conductor-37 curve: type, trace of Frobenius,
// and the point count at every prime below 60. The Hasse window
// |a_p| < 2 sqrt(p) is printed alongside for scale.

use mordell::curve::Curve;
use mordell::local::{local_data, ReductionKind};

fn main() -> mordell::Result<()> {
    let e = Curve::new(0, 0, 1, -1, 0)?;
    println!("curve: {e}");
    println!();
    println!("{:>4} {:<24} {:>4} {:>6}  window", "p", "reduction", "a_p", "#E");

    for p in mordell::arith::primes_up_to(60) {
        let d = local_data(&e, p)?;
        let bound = 2.0 * (p as f64).sqrt();
        let window = match d.kind {
            ReductionKind::Good => format!("|{}| < {:.2}", d.ap, bound),
            _ => String::from("-"),
        };
        println!(
            "{:>4} {:<24} {:>4} {:>6}  {window}",
            p,
            d.kind.label(),
            d.ap,
            d.count
        );
    }

    println!();
    // the lone bad prime is the conductor itself; its fiber is a node
    // whose tangent slopes are irrational mod 37, hence nonsplit
    let bad = local_data(&e, 37)?;
    assert!(matches!(bad.kind, ReductionKind::NonsplitMultiplicative));
    println!("bad fiber at 37: {} (a_37 = {})", bad.kind.label(), bad.ap);
    Ok(())
}
