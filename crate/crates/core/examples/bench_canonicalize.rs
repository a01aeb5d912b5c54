//! Times canonicalization over a random corpus and lists the slowest structures.

use std::time::Instant;

use mat2seq::canonicalize;
use mat2seq::verify::random_corpus;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let corpus = random_corpus(n, 2024);
    let mut times: Vec<(f64, usize)> = Vec::new();
    let start = Instant::now();
    for c in &corpus {
        let t = Instant::now();
        canonicalize(c).unwrap();
        times.push((t.elapsed().as_secs_f64(), c.len()));
    }
    println!("{} structures in {:.2}s", n, start.elapsed().as_secs_f64());
    times.sort_by(|a, b| b.0.total_cmp(&a.0));
    println!(
        "slowest (seconds, atoms): {:?}",
        &times[..times.len().min(10)]
    );
}
