// The thirteen imaginary quadratic points with class number one, their
// integer j-invariants recovered from the q-expansion, and a Weierstrass
// model attached to each j. The expansion is truncated at forty terms;
// the certified tail bound makes the comparison rigorous rather than
// hopeful.

use mordell::modular::{cm_table_verify, curve_from_j, j_eval, JTable};
use num_complex::Complex64;
use num_rational::BigRational;

fn main() -> mordell::Result<()> {
    println!("{:>3} {:<16} {:>22} {:>10}", "k", "point", "j (exact)", "error");
    for c in cm_table_verify(40) {
        assert!(c.pass);
        println!(
            "{:>3} {:<16} {:>22} {:>10.2e}",
            c.index, c.label, c.expected, c.error
        );
    }
    println!();

    // the same table evaluates j anywhere in the fundamental domain
    let table = JTable::new(60);
    let rho = Complex64::new(0.5, 0.75f64.sqrt());
    let jr = table.eval(rho)?;
    println!(
        "j(rho) = {:.3e} + {:.3e} i  (tail {:.1e})",
        jr.value.re, jr.value.im, jr.tail
    );
    let ji = j_eval(Complex64::new(0.0, 1.0), 60)?;
    println!("j(i)   = {:.6} (expected 1728)", ji.value.re);
    println!();

    // every rational j is the invariant of an explicit curve
    for j in [0i64, 1728, 54000, -32768, 287496] {
        let e = curve_from_j(&BigRational::from_integer(j.into()))?;
        assert_eq!(e.j_invariant(), BigRational::from_integer(j.into()));
        println!("j = {j:>8}: {e}");
    }
    Ok(())
}
