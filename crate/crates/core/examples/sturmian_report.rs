//! Every check on one word plus the combined judgment, as text and as JSON records.

use sturmlex::characterize::report::sturmian_records;
use sturmlex::characterize::sturmian_verdict;

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "std:1,2,3,1,2,3".to_string());
    let report = sturmian_verdict(&spec.parse().expect("valid spec"), None, 24).unwrap();
    println!("{} on {} letters", report.spec, report.prefix_len);
    println!("judgment    {}", report.judgment);
    println!("periodicity {}", report.periodicity);
    println!("recurrence  {}", report.recurrence);
    for record in sturmian_records(&report) {
        println!("{}", serde_json::to_string(&record).unwrap());
    }
}
