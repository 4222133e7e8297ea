use super::Trace;

/// Renders a trace in derivation style, one configuration per line:
///
/// ```text
/// q0 aabbcba<|
/// |- q1 aabbba<|
/// ...
/// |- Accept
/// ```
pub fn render_trace(trace: &Trace) -> String {
    let mut out = String::new();
    for (i, step) in trace.steps.iter().enumerate() {
        if i > 0 {
            out.push_str("|- ");
        }
        out.push_str(&step.config.to_string());
        out.push('\n');
    }
    out.push_str("|- ");
    out.push_str(&trace.verdict.to_string());
    out.push('\n');
    out
}
