use anyhow::{bail, Result};
use clap::Args;
use cmc_core::delaunay::nodoid_closure_solve;

use crate::output::num;

#[derive(Debug, Args)]
pub struct NodoidArgs {
    /// Largest closure index; every m = 1..=M is solved unless --only.
    #[arg(long)]
    m: u32,
    /// Solve only m = M.
    #[arg(long)]
    only: bool,
}

pub fn run(a: &NodoidArgs) -> Result<()> {
    if a.m == 0 {
        bail!("--m must be at least 1");
    }
    println!("# m r");
    let first = if a.only { a.m } else { 1 };
    for m in first..=a.m {
        println!("{m} {}", num(nodoid_closure_solve(m)?));
    }
    Ok(())
}
