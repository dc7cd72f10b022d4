// The adjoint orbits of sl(2, R): bracket relations checked in exact
// rational arithmetic, the orbit classification by the invariant
// delta = x^2 + y^2 - z^2, and the map omega sending a nilpotent
// element to a point of the upper half-plane.

use mordell::sl2::{exp_map, omega, omega_inverse_nilpotent, LieElement, OrbitClass};
use num_complex::Complex64;
use num_rational::BigRational;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() -> mordell::Result<()> {
    // structure constants, exactly
    let x = LieElement::<BigRational>::basis_x();
    let y = LieElement::<BigRational>::basis_y();
    let z = LieElement::<BigRational>::basis_z();
    assert_eq!(x.bracket(&y), z.scale(&rat(2)));
    assert_eq!(y.bracket(&z), x.scale(&rat(-2)));
    assert_eq!(z.bracket(&x), y.scale(&rat(-2)));
    println!("bracket table verified exactly: [X,Y] = 2Z, [Y,Z] = -2X, [Z,X] = -2Y");

    // one representative per orbit type
    let reps: [(&str, LieElement<BigRational>); 4] = [
        ("zero", LieElement::zero()),
        ("nilpotent", LieElement::s_upper()),
        ("elliptic", z.clone()),
        ("hyperbolic", x.clone()),
    ];
    for (label, f) in &reps {
        println!("{label:<11} delta = {:<4} class {:?}", f.delta(), f.classify());
    }
    println!();

    // omega: the nilpotent cone minus zero maps onto the half-plane.
    // dyadic coordinates keep delta = 0 exact even in floats
    let f = LieElement::new(0.75, 1.0, 1.25);
    assert_eq!(f.classify(), OrbitClass::NilpotentPlus);
    let tau = omega(&f);
    println!("omega({:?}) = {:.6} + {:.6} i", (f.x, f.y, f.z), tau.re, tau.im);

    // and back: the minimal preimage, then the round trip
    let target = Complex64::new(-0.7, 2.2);
    let g = omega_inverse_nilpotent(target)?;
    let back = omega(&g);
    println!(
        "omega_inverse({:.1} + {:.1} i) = ({:.6}, {:.6}, {:.6})",
        target.re, target.im, g.x, g.y, g.z
    );
    println!("round-trip residual {:.2e}", (back - target).norm());

    // exponentials land in SL(2, R)
    let m = exp_map(&LieElement::new(0.2, -0.1, 0.9));
    println!();
    println!("exp of a sample element has det = {:.12}", m.det());
    Ok(())
}
