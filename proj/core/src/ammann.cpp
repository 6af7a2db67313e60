namespace qct {
}
