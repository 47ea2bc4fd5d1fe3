import { spawn, type ChildProcess } from "node:child_process";

export interface RunningService {
  baseUrl: string;
  stop(): Promise<void>;
}

async function healthy(baseUrl: string): Promise<boolean> {
  try {
    const res = await fetch(baseUrl + "/api/health");
    return res.ok;
  } catch {
    return false;
  }
}

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

/** Spawn `python3 -m cagames serve` on a random port and wait for it. */
export async function startService(): Promise<RunningService> {
  let lastError = "";
  for (let attempt = 0; attempt < 5; attempt++) {
    const port = 20000 + Math.floor(Math.random() * 20000);
    const baseUrl = `http://127.0.0.1:${port}`;
    const proc: ChildProcess = spawn(
      "python3",
      ["-m", "cagames", "serve", "--port", String(port)],
      { stdio: ["ignore", "ignore", "pipe"] },
    );
    let stderr = "";
    proc.stderr?.on("data", (chunk) => (stderr += String(chunk)));
    let exited = false;
    proc.on("exit", () => (exited = true));
    for (let i = 0; i < 100 && !exited; i++) {
      if (await healthy(baseUrl)) {
        return {
          baseUrl,
          stop: async () => {
            proc.kill("SIGTERM");
            await sleep(100);
            if (!exited) {
              proc.kill("SIGKILL");
            }
          },
        };
      }
      await sleep(100);
    }
    proc.kill("SIGKILL");
    lastError = stderr || "service did not come up";
  }
  throw new Error(`could not start engine service: ${lastError}`);
}
