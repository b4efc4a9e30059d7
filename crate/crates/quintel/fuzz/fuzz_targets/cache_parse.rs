#![no_main]

use libfuzzer_sys::fuzz_target;

// The cache parser must reject arbitrary input with an error, never a
// panic; a successful parse must survive a render/re-parse round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = quintel::quintic::parse_cache_text(text) {
        let mut rendered = format!(
            "quintel-frob-cache\tv{}\t{}\n",
            parsed.version, parsed.coeffs
        );
        for line in &parsed.lines {
            let parts: Vec<String> = line.partition.iter().map(usize::to_string).collect();
            rendered.push_str(&format!(
                "{}\t{}\t{}\n",
                line.p,
                parts.join(","),
                line.label
            ));
        }
        let again = quintel::quintic::parse_cache_text(&rendered).expect("round trip");
        assert_eq!(again.lines.len(), parsed.lines.len());
    }
});
