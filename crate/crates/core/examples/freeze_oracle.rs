//! Regenerates `tests/data/oracle_gl_2_1.json`.

use supervogan::oracle::brute_involution_pairs;

fn main() {
    let census = brute_involution_pairs(2, 1).expect("gl(2|1) is within the size bound");
    println!(
        "{}",
        serde_json::to_string_pretty(&census).expect("serializable")
    );
}
