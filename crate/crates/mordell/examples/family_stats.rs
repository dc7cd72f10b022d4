// The family y^2 = x^3 + Ax + B ordered by max(4|A|^3, 27 B^2), one
// model per isomorphism class. A census of torsion structures over the
// whole family below a height bound shows how quickly torsion thins
// out: most curves have none at all.

use mordell::families::{enumerate_family, torsion_census};

fn main() -> mordell::Result<()> {
    for xmax in [500, 5_000, 50_000] {
        let fam = enumerate_family(xmax);
        println!("height < {xmax}: {} curves", fam.len());
    }
    println!();

    let census = torsion_census(50_000, 2)?;
    println!("torsion census below height 50000:");
    println!("{:>16} {:>7} {:>9}", "structure", "count", "fraction");
    for (label, count) in &census.counts {
        println!(
            "{label:>16} {count:>7} {:>8.4}%",
            100.0 * *count as f64 / census.total as f64
        );
    }
    println!();
    println!("average torsion order: {:.6}", census.average_order);
    println!(
        "all structures admissible: {}; certified {}/{}",
        census.all_admissible, census.certified, census.total
    );
    Ok(())
}
