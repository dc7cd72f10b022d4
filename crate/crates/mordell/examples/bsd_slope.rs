// The partial products prod_{p <= x} N_p / p grow like C (log x)^r when
// the rank is r. Plotting log of the product against log log x therefore
// gives a line whose slope estimates the rank. This runs the scan on
// four curves of known rank 0 through 3 and prints the fitted slopes.
//
// The estimator is honest but noisy: at x = 10^5 the slope has settled
// to roughly the right integer, not exactly onto it.

use mordell::lseries::bsd_scan;
use mordell::registry::Registry;

fn main() -> mordell::Result<()> {
    let reg = Registry::builtin();
    let names = ["rank0-32", "rank1-37", "rank2-389", "rank3-5077"];

    println!("{:<12} {:>9} {:>8}", "curve", "slope", "rank");
    for (rank, name) in names.iter().enumerate() {
        let entry = reg.get(name).expect("builtin entry");
        let scan = bsd_scan(&entry.curve, 100_000, 24, 1)?;
        println!("{name:<12} {:>9.4} {rank:>8}", scan.slope);
    }

    println!();
    println!("checkpoint trail for rank1-37:");
    let scan = bsd_scan(&reg.get("rank1-37").unwrap().curve, 100_000, 10, 1)?;
    for cp in &scan.checkpoints {
        let llx = (cp.x as f64).ln().ln();
        println!("  x = {:>7}  log prod = {:>8.4}  loglog x = {:.4}", cp.x, cp.log_product, llx);
    }
    Ok(())
}
