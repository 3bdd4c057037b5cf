//! The JSON interchange format.

use whopf::document::*;
use whopf::zoo;

fn main() {
    let h = zoo::group_z3();
    let doc = WhaDocument::from_algebra(&h, "group_z3");
    let text = doc.to_json();
    println!("{}", &text[..text.find("\"mult\"").unwrap()]);
    let back = parse_algebra(&text).unwrap();
    println!("round trip exact: {}", back == h);

    let d = zoo::sign_bicharacter_data();
    println!("{}", serde_json::to_string(&DynamicalDocument::from_data(&d)).unwrap());
}
