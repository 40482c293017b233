use std::io::Write;

fn main() {
    let ((code, report), format) = bihom::cli::run_with_format(std::env::args());
    let text = report.render(format, bihom::cli::use_color());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    std::process::exit(code);
}
