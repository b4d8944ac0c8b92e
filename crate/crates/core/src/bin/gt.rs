fn main() {
    std::process::exit(gt_core::cli::main_with_args(std::env::args_os()));
}
