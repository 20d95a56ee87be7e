//! Writes the data behind every figure to CSV files in a directory.
//!
//! ```bash
//! cargo run --release -p binomci --example figures -- out/
//! ```

use std::error::Error;
use std::fs::{self, File};
use std::path::PathBuf;

use binomci::cli::figures::{build, FigureId, FigureOptions};

fn main() -> Result<(), Box<dyn Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;

    let opts = FigureOptions::default();
    for id in FigureId::ALL {
        let table = build(id, &opts)?;
        let path = dir.join(format!("figure_{id}.csv"));
        table.write_csv(File::create(&path)?)?;
        println!(
            "{:<28} {:>6} rows  {}",
            path.display(),
            table.rows.len(),
            table.header.join(",")
        );
    }
    Ok(())
}
