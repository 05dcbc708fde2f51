"""parastab Test Suite."""
