//! Write a table in each export format and read the b-file back.

use jacobsthal3::export::{parse_bfile, render_table, Format};
use jacobsthal3::sequences::range;
use jacobsthal3::SequenceParams;

fn main() -> jacobsthal3::Result<()> {
    let p = SequenceParams::jacobsthal_lucas();
    let table: Vec<_> = (0u64..).zip(range(&p, 0, 9)?).collect();
    for format in [Format::Csv, Format::Json, Format::Bfile] {
        println!("--- {format:?}");
        print!("{}", render_table(&table, format)?);
    }
    let text = render_table(&table, Format::Bfile)?;
    let parsed = parse_bfile(&text)?;
    println!("--- parsed {} rows back, last = {:?}", parsed.len(), parsed.last().map(|(n, v)| (n, v.to_string())));
    Ok(())
}
