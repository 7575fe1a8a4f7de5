# CLI command routers
