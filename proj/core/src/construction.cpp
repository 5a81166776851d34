namespace blackwell {}
