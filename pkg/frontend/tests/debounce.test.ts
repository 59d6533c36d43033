import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { Debouncer } from "../src/debounce.js";

describe("Debouncer", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("fires once per idle burst", () => {
    const debouncer = new Debouncer(300);
    const fn = vi.fn();
    for (let i = 0; i < 10; i++) {
      debouncer.schedule(fn);
      vi.advanceTimersByTime(50); // keeps typing, never idle
    }
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(300);
    expect(fn).toHaveBeenCalledTimes(1);
  });

  it("fires again after a second burst", () => {
    const debouncer = new Debouncer(300);
    const fn = vi.fn();
    debouncer.schedule(fn);
    vi.advanceTimersByTime(300);
    debouncer.schedule(fn);
    vi.advanceTimersByTime(300);
    expect(fn).toHaveBeenCalledTimes(2);
  });

  it("cancel suppresses the pending call", () => {
    const debouncer = new Debouncer(300);
    const fn = vi.fn();
    debouncer.schedule(fn);
    debouncer.cancel();
    vi.advanceTimersByTime(1000);
    expect(fn).not.toHaveBeenCalled();
  });
});
