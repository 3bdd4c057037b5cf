//! The full pipeline over every bundled example.

fn main() {
    print!("{}", whopf::zoo::run_all(None).table());
    let mutated = whopf::zoo::run_all(Some("group_s3"));
    let failing: Vec<_> = mutated.rows.iter().filter(|r| !r.passed()).map(|r| &r.name).collect();
    println!("with group_s3 mutated, failing: {:?}", failing);
}
