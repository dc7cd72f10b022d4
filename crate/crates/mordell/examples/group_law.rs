// Exact chord-and-tangent arithmetic on y^2 + y = x^3 - x, the rank-one
// curve of conductor 37. Every coordinate below is a bona fide rational
// number; nothing is floated.

use mordell::curve::{Curve, Point};

fn main() -> mordell::Result<()> {
    let e = Curve::new(0, 0, 1, -1, 0)?;
    let (short, _) = e.short_model();
    println!("curve: {e}");
    println!("short: {short}");
    println!("disc:  {}", short.discriminant()?);
    println!("j:     {}", e.j_invariant());
    println!();

    let p = Point::from_ints(0, 0);
    assert!(e.contains(&p));

    // multiples of the generator; the numerators and denominators grow
    // quadratically in digit count, which is the height machinery's job
    // to measure
    println!("multiples of P = {p}:");
    for n in 1..=9 {
        let q = e.mul(n, &p)?;
        println!("  {n}P = {q}");
    }
    println!();

    // group axioms on concrete points
    let p2 = e.mul(2, &p)?;
    let p3 = e.mul(3, &p)?;
    let lhs = e.add(&e.add(&p, &p2)?, &p3)?;
    let rhs = e.add(&p, &e.add(&p2, &p3)?)?;
    assert_eq!(lhs, rhs);
    println!("associativity on (P, 2P, 3P): ok");

    let minus = e.neg(&p);
    assert!(e.add(&p, &minus)?.is_infinity());
    println!("P + (-P) = O: ok");

    // naive height log max(|num|, |den|) of x(nP) against n^2
    println!();
    println!("naive height growth (expect ratio to stabilize):");
    for n in [2, 4, 8, 16] {
        let q = e.mul(n, &p)?;
        let h = q.naive_height();
        println!("  n = {n:2}  h(x(nP)) = {h:8.3}  h/n^2 = {:.5}", h / (n * n) as f64);
    }
    Ok(())
}
