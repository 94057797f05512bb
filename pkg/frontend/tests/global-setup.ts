/** Spawns the real backend for the test run (the client is only testable
 * against its actual API; nothing here is mocked). */

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import os from "node:os";
import path from "node:path";

export const PORT = 8799;
const REPO_ROOT = path.resolve(__dirname, "..", "..");
const CORPUS = path.join(REPO_ROOT, "tests", "data", "authored120.csv");

let server: ChildProcess | undefined;

async function waitForServer(baseUrl: string, timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${baseUrl}/api/v1/stats`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error(`backend did not come up on ${baseUrl} (corpus: ${CORPUS})`);
}

export async function setup(): Promise<void> {
  const resultsPath = path.join(mkdtempSync(path.join(os.tmpdir(), "pubgames-")), "results.jsonl");
  server = spawn(
    "python3",
    ["-m", "pubgames", "serve", "--corpus", CORPUS, "--port", String(PORT),
     "--results", resultsPath],
    { cwd: REPO_ROOT, stdio: ["ignore", "inherit", "inherit"] },
  );
  await waitForServer(`http://127.0.0.1:${PORT}`);
}

export async function teardown(): Promise<void> {
  server?.kill();
}
