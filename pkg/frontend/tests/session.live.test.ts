/** Scripted end-to-end session against a live service instance.
 *
 * Spawns the Python service, loads the six-argument fixture whose only
 * extension under the unchallenged-commitment semantics is {d, f}, and
 * drives the view-model exactly as the browser would: two steps to the
 * terminal state, one undo back, asserting after every response that the
 * displayed choice list byte-matches the service payload.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerViewModel } from "../src/viewmodel.js";

const PORT = 8891 + (process.pid % 97);
const BASE = `http://127.0.0.1:${PORT}`;

const FIXTURE_TGF = ["a", "b", "c", "d", "e", "f", "#",
  "a b", "b a", "a c", "b c", "c e", "d e", "e d", "e f", "f e", ""].join("\n");

let service: ChildProcess | null = null;

async function waitForService(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/`);
      if (response.status < 500) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

function payloadChoices(raw: string): string {
  return JSON.stringify((JSON.parse(raw) as { state: { choices: unknown } }).state.choices);
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "saf", "--task", "SERVE", "--port", String(PORT), "--host", "127.0.0.1"],
    { stdio: "ignore" },
  );
  await waitForService();
}, 40000);

afterAll(() => {
  service?.kill();
});

describe("live unchallenged-semantics session", () => {
  it("walks to the terminal extension {d, f} and back", async () => {
    const vm = new ExplorerViewModel(new ApiClient(BASE));

    expect(await vm.loadFramework("tgf", FIXTURE_TGF)).toBe(true);
    expect(vm.framework?.args).toEqual(["a", "b", "c", "d", "e", "f"]);

    expect(await vm.openSession("uc")).toBe(true);
    expect(vm.state?.choices.map((c) => c.set)).toEqual([["d"], ["f"]]);
    expect(vm.state?.terminal).toBe(false);
    expect(vm.choicesJson()).toBe(payloadChoices(vm.lastStateRaw));

    expect(await vm.stepChoice(["d"])).toBe(true);
    expect(vm.state?.accumulated).toEqual(["d"]);
    expect(vm.state?.choices.map((c) => c.set)).toEqual([["f"]]);
    expect(vm.choicesJson()).toBe(payloadChoices(vm.lastStateRaw));
    const oneStepState = vm.state;

    expect(await vm.stepChoice(["f"])).toBe(true);
    expect(vm.state?.accumulated).toEqual(["d", "f"]);
    expect(vm.state?.terminal).toBe(true);
    expect(vm.stepsTaken).toBe(2);
    expect(vm.choicesJson()).toBe(payloadChoices(vm.lastStateRaw));

    expect(await vm.undo()).toBe(true);
    expect(vm.state).toEqual(oneStepState);
    expect(vm.choicesJson()).toBe(payloadChoices(vm.lastStateRaw));

    // the eligible classes come straight from the service
    expect(vm.state?.choices.map((c) => c.class)).toEqual(["unattacked"]);
  }, 30000);
});
